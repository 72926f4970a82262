#pragma once

#include "knotcv/integer.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotcv {

// Ordered variable list with per-variable Laurent flags. Variables flagged
// Laurent may carry negative exponents (the meridian eigenvalue m is the
// only such variable in practice).
struct VarContext {
    std::vector<std::string> names;
    std::vector<bool> laurent;

    bool operator==(const VarContext& o) const {
        return names == o.names && laurent == o.laurent;
    }
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    std::size_t size() const { return names.size(); }
};

using Exps = std::vector<int>;

// Canonical term order: larger grade (sum of |exponents|) first, then the
// lexicographically larger exponent vector first. Absolute values in the
// grade put m^2 and m^-2 in the same block, which is the printing
// convention used throughout.
struct TermOrder {
    bool operator()(const Exps& a, const Exps& b) const {
        long ga = 0, gb = 0;
        for (int e : a) ga += e < 0 ? -e : e;
        for (int e : b) gb += e < 0 ? -e : e;
        if (ga != gb) return ga > gb;
        return a > b;
    }
};

// Sparse multivariate polynomial with integer coefficients; exponents may be
// negative in Laurent-flagged variables. Canonical form: no zero terms.
// Immutable in spirit: all operations return new values.
class LaurentPoly {
public:
    using TermMap = std::map<Exps, Int, TermOrder>;

    LaurentPoly() = default;  // zero in the empty context
    explicit LaurentPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly constant(VarContext ctx, Int c);
    static LaurentPoly monomial(VarContext ctx, Int c, Exps e);
    static LaurentPoly variable(const VarContext& ctx, const std::string& name);

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value; throws if not constant.
    Int constant_value() const;
    bool is_one() const { return is_constant() && !is_zero() && constant_value() == 1; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }

    LaurentPoly pow(unsigned e) const;

    // Max over terms of the signed exponent sum; nullopt for the zero
    // polynomial (the distinguished "minus infinity").
    std::optional<int> total_degree() const;
    std::optional<int> degree_in(const std::string& var) const;
    // Sum of the terms of maximal degree in `var`, with that variable's
    // exponent cleared. Zero polynomial maps to zero.
    LaurentPoly leading_coeff_in(const std::string& var) const;

    // Composes p with the given bindings. Unbound variables are retained and
    // must exist in the target context. A variable occurring with negative
    // exponents may only be bound to a +-1-coefficient monomial (so its
    // inverse stays in the ring); a binding that would push a negative
    // exponent into a non-Laurent variable throws.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings,
                           const VarContext& target) const;

    // Multiplies by the minimal power of `var` making all its exponents
    // nonnegative. No-op if none are negative.
    LaurentPoly cleared(const std::string& var) const;

    template <class C>
    C eval(const std::vector<C>& values) const {
        C acc = C(0);
        for (const auto& [e, c] : terms_) {
            C t = C(c.get_d());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                C p = C(1);
                int k = e[i] < 0 ? -e[i] : e[i];
                for (int j = 0; j < k; ++j) p *= values[i];
                t = e[i] < 0 ? t / p : t * p;
            }
            acc += t;
        }
        return acc;
    }

    std::string str() const;

private:
    VarContext ctx_;
    TermMap terms_;

    void add_term(const Exps& e, const Int& c);
    void check_exponents(const Exps& e) const;
    friend class BivarPoly;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) { return p * c; }

}  // namespace knotcv
