#pragma once

#include "knotcv/integer.hpp"
#include "knotcv/laurent.hpp"
#include "knotcv/unipoly.hpp"

#include <cmath>
#include <complex>

namespace knotcv {

// One/zero elements and exact-unit tests per coefficient domain, so the
// matrix code is generic over exact rings and floating complex entries.
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_zero(const Int&) { return Int(0); }
inline bool ring_is_one(const Int& v) { return v == 1; }

inline UniPoly ring_one(const UniPoly&) { return UniPoly::constant(1); }
inline UniPoly ring_zero(const UniPoly&) { return UniPoly{}; }
inline bool ring_is_one(const UniPoly& v) { return v == UniPoly::constant(1); }

inline LaurentPoly ring_one(const LaurentPoly& s) { return LaurentPoly::constant(s.context(), 1); }
inline LaurentPoly ring_zero(const LaurentPoly& s) { return LaurentPoly(s.context()); }
inline bool ring_is_one(const LaurentPoly& v) { return v.is_one(); }

template <class F>
std::complex<F> ring_one(const std::complex<F>&) { return {F(1), F(0)}; }
template <class F>
std::complex<F> ring_zero(const std::complex<F>&) { return {F(0), F(0)}; }
template <class F>
bool ring_is_one(const std::complex<F>& v) { return std::abs(v - std::complex<F>(1)) < F(1e-9); }

// 2x2 matrix over a commutative coefficient domain.
template <class T>
struct Mat2 {
    T e11, e12, e21, e22;

    Mat2 operator*(const Mat2& o) const {
        return {e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
                e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {e11 - o.e11, e12 - o.e12, e21 - o.e21, e22 - o.e22};
    }
    Mat2 scaled(const T& s) const { return {s * e11, s * e12, s * e21, s * e22}; }
    T trace() const { return e11 + e22; }
    T det() const { return e11 * e22 - e12 * e21; }
    Mat2 adjugate() const { return {e22, ring_zero(e12) - e12, ring_zero(e21) - e21, e11}; }
    bool operator==(const Mat2& o) const {
        return e11 == o.e11 && e12 == o.e12 && e21 == o.e21 && e22 == o.e22;
    }
};

template <class T>
Mat2<T> identity_like(const Mat2<T>& m) {
    return {ring_one(m.e11), ring_zero(m.e11), ring_zero(m.e11), ring_one(m.e11)};
}

// M^n for any integer n via the two-term Cayley-Hamilton recursion
// M^(k+1) = tr(M)*M^k - M^(k-1), run backward for n < 0. Requires det = 1.
template <class T>
Mat2<T> matrix_power_recursive(const Mat2<T>& m, long n) {
    if (!ring_is_one(m.det())) throw error("matrix_power_recursive requires det = 1");
    const T tr = m.trace();
    Mat2<T> prev = identity_like(m);  // M^0
    if (n == 0) return prev;
    Mat2<T> cur = m;  // M^1
    if (n > 0) {
        for (long k = 1; k < n; ++k) {
            Mat2<T> next = cur.scaled(tr) - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // lo = M^k, hi = M^(k+1); step down with M^(k-1) = tr*M^k - M^(k+1)
    Mat2<T> hi = cur, lo = prev;
    for (long k = 0; k > n; --k) {
        Mat2<T> next = lo.scaled(tr) - hi;
        hi = lo;
        lo = next;
    }
    return lo;
}

}  // namespace knotcv
