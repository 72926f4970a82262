#pragma once

#include "knotcv/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotcv {

struct RationalRoot {
    Rat value;      // in lowest terms
    bool integral;  // denominator 1
};

// All rational roots of a nonzero polynomial, found from divisor pairs of the
// trailing and leading coefficients and verified by exact evaluation.
std::vector<RationalRoot> rational_roots(const UniPoly& p);

struct ModFactorDegrees {
    long prime;
    std::vector<int> degrees;  // sorted, with multiplicity
};

// Irreducible factor degrees (with multiplicity) of p mod `prime`, plus the
// factors themselves in dense coefficient form. Requires prime not dividing
// the leading coefficient.
struct ModFactorization {
    long prime;
    std::vector<std::vector<long>> factors;  // monic, coefficients in [0, prime)
    std::vector<int> multiplicities;
    std::vector<int> degrees() const;
};
ModFactorization factor_mod_p(const UniPoly& p, long prime);

struct IrreducibilityVerdict {
    enum class Status { Irreducible, Reducible };
    Status status;
    // For Reducible: a nontrivial integer factor, verified by exact division.
    std::optional<UniPoly> witness;
    // method that concluded: content | squarefree-gcd | rational-root |
    // degree-1 | degree-sieve | lift-recombine
    std::string method;
    std::vector<ModFactorDegrees> primes;  // sieve transcript
    long lift_prime = 0;
    int lift_exponent = 0;
    unsigned long subsets_tested = 0;

    bool irreducible() const { return status == Status::Irreducible; }
};

// Decides Z-irreducibility of a nonconstant integer polynomial. Pipeline:
// content and rational-root screens, factor-degree sieve across several good
// primes, then Hensel lifting with factor recombination. Always returns a
// proven verdict or throws resource_limit_error; never "unknown".
IrreducibilityVerdict is_irreducible_Z(const UniPoly& p, int prime_count = 8);

}  // namespace knotcv
