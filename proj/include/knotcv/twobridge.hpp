#pragma once

#include "knotcv/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace knotcv {

// Schubert fraction of a 2-bridge knot, kept in normal form 0 < p < q,
// gcd(p, q) = 1.
struct Fraction {
    long long p = 0;
    long long q = 1;

    // Maps an arbitrary pair to normal form: make q positive, divide out the
    // gcd, reduce p modulo q into (0, q).
    static Fraction normalize(long long p, long long q);

    std::string str() const;
    bool operator==(const Fraction&) const = default;
};

// Value of [a1, a2, ..., ak] = 1/(a1 - 1/(a2 - 1/(...))), evaluated
// bottom-up in exact rationals. Throws on an empty list or when a zero
// denominator arises mid-evaluation.
Fraction continued_fraction_value(const std::vector<long long>& entries);

// Schubert equivalence: same denominator and p' congruent to p or to the
// inverse of p modulo q.
bool fractions_equivalent(const Fraction& f1, const Fraction& f2);

// The two closed-form fractions (4n-1)/(6n-1) and (6n-4)/(6n-1) of J(3,2n),
// normalized. Cross-checks their equivalence and their continued-fraction
// expansions ([1,-2,-2n] always; the 2n-entry [2,...,2,-2n] for n > 0).
std::pair<Fraction, Fraction> j3_fraction(int n);  // n != 0

}  // namespace knotcv
