#pragma once

#include "knotcv/laurent.hpp"
#include "knotcv/unipoly.hpp"

#include <optional>
#include <string>

namespace knotcv {

// The shared (x, z) context of character-variety polynomials.
const VarContext& xz_context();
// The (m, q) context with m Laurent-flagged.
const VarContext& mq_context();

// Exact polynomial in x and z over the integers. Thin wrapper over the
// sparse representation with the character-variety specific views:
// the diagonal r(x,x) and the parabolic slice r(2, 2-q).
class BivarPoly {
public:
    BivarPoly() : p_(xz_context()) {}
    explicit BivarPoly(LaurentPoly p);

    static BivarPoly constant(Int c) { return BivarPoly(LaurentPoly::constant(xz_context(), std::move(c))); }
    static BivarPoly term(Int c, int dx, int dz);
    static BivarPoly x() { return term(1, 1, 0); }
    static BivarPoly z() { return term(1, 0, 1); }

    const LaurentPoly& inner() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    BivarPoly operator-() const { return BivarPoly(-p_); }
    BivarPoly operator+(const BivarPoly& o) const { return BivarPoly(p_ + o.p_); }
    BivarPoly operator-(const BivarPoly& o) const { return BivarPoly(p_ - o.p_); }
    BivarPoly operator*(const BivarPoly& o) const { return BivarPoly(p_ * o.p_); }
    BivarPoly operator*(const Int& k) const { return BivarPoly(p_ * k); }
    bool operator==(const BivarPoly& o) const { return p_ == o.p_; }

    std::optional<int> total_degree() const { return p_.total_degree(); }

    // r(x, x) as a univariate polynomial in x.
    UniPoly diagonal() const;
    // r(2, 2-q) as a univariate polynomial in q.
    UniPoly parabolic_slice() const;
    // Substitution x -> m^2 + 1/m^2, z -> m^2 + 1/m^2 - q into the (m,q) ring.
    LaurentPoly to_mq() const;

    std::string str() const { return p_.str(); }

private:
    LaurentPoly p_;
};

}  // namespace knotcv
