#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace knotcv {

// Exact arbitrary-precision integers and rationals (GMP).
using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation would exceed a hard resource threshold
// (e.g. factor recombination subset budget). Never a wrong answer.
struct resource_limit_error : error {
    using error::error;
};

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Floor square root.
inline Int int_sqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

}  // namespace knotcv
