#pragma once

#include "knotcv/integer.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace knotcv {

// Dense univariate polynomial over the integers, index = degree. Canonical
// form: leading coefficient nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;  // zero
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(Int c) { return UniPoly(std::vector<Int>{std::move(c)}); }
    static UniPoly x() { return UniPoly({0, 1}); }
    static UniPoly monomial(Int c, int deg);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
    }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    bool is_monic() const;  // throws on zero

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Int& k) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly pow(unsigned e) const;
    UniPoly derivative() const;

    Int content() const;  // nonnegative; 0 only for zero
    UniPoly primitive_part() const;

    // Quotient if the division is exact over Z, nullopt otherwise.
    std::optional<UniPoly> divide_exact(const UniPoly& divisor) const;

    // Primitive gcd with positive leading coefficient (primitive PRS).
    static UniPoly gcd(UniPoly a, UniPoly b);

    UniPoly squarefree_part() const;

    Int eval_int(const Int& x) const;
    // True iff u/v (coprime) is a root: sum a_i u^i v^(d-i) = 0.
    bool has_rational_root(const Int& u, const Int& v) const;

    template <class C>
    C eval(const C& x) const {
        C acc = C(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + C(c_[i].get_d());
        return acc;
    }

    // p(s*x) -- used to map factors of the monicized polynomial back.
    UniPoly compose_scale(const Int& s) const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Int> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline UniPoly operator*(const Int& k, const UniPoly& p) { return p * k; }

}  // namespace knotcv
