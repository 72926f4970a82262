#include "knotcv/laurent.hpp"

#include <sstream>

namespace knotcv {

void LaurentPoly::check_exponents(const Exps& e) const {
    if (e.size() != ctx_.size())
        throw error("exponent vector length does not match variable context");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ctx_.laurent[i])
            throw error("negative exponent in non-Laurent variable '" + ctx_.names[i] + "'");
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
    if (c == 0) return;
    check_exponents(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::constant(VarContext ctx, Int c) {
    LaurentPoly p(std::move(ctx));
    p.add_term(Exps(p.ctx_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(VarContext ctx, Int c, Exps e) {
    LaurentPoly p(std::move(ctx));
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarContext& ctx, const std::string& name) {
    int i = ctx.index_of(name);
    if (i < 0) throw error("unknown variable '" + name + "'");
    Exps e(ctx.size(), 0);
    e[i] = 1;
    return monomial(ctx, 1, e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Int LaurentPoly::constant_value() const {
    if (!is_constant()) throw error("polynomial is not constant");
    return terms_.empty() ? Int(0) : terms_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (!(ctx_ == o.ctx_)) throw error("variable-context mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (!(ctx_ == o.ctx_)) throw error("variable-context mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (!(ctx_ == o.ctx_)) throw error("variable-context mismatch");
    LaurentPoly r(ctx_);
    Exps e(ctx_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r(ctx_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(ctx_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::optional<int> LaurentPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    bool have = false;
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (!have || s > best) best = s, have = true;
    }
    return best;
}

std::optional<int> LaurentPoly::degree_in(const std::string& var) const {
    int i = ctx_.index_of(var);
    if (i < 0) throw error("unknown variable '" + var + "'");
    if (terms_.empty()) return std::nullopt;
    bool have = false;
    int best = 0;
    for (const auto& [e, c] : terms_)
        if (!have || e[i] > best) best = e[i], have = true;
    return best;
}

LaurentPoly LaurentPoly::leading_coeff_in(const std::string& var) const {
    int i = ctx_.index_of(var);
    if (i < 0) throw error("unknown variable '" + var + "'");
    LaurentPoly r(ctx_);
    auto d = degree_in(var);
    if (!d) return r;
    for (const auto& [e, c] : terms_) {
        if (e[i] != *d) continue;
        Exps e2 = e;
        e2[i] = 0;
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& bindings,
                                    const VarContext& target) const {
    const std::size_t nv = ctx_.size();
    std::vector<LaurentPoly> images;
    images.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        auto it = bindings.find(ctx_.names[i]);
        if (it != bindings.end()) {
            if (!(it->second.context() == target))
                throw error("binding for '" + ctx_.names[i] + "' is not in the target context");
            images.push_back(it->second);
        } else {
            images.push_back(variable(target, ctx_.names[i]));
        }
    }
    // inverse images, computed on demand; only unit monomials are invertible
    std::vector<std::optional<LaurentPoly>> inverses(nv);
    auto inverse_of = [&](std::size_t i) -> const LaurentPoly& {
        if (!inverses[i]) {
            const LaurentPoly& b = images[i];
            if (b.terms_.size() != 1)
                throw error("variable '" + ctx_.names[i] +
                            "' occurs with negative exponent; binding is not an invertible monomial");
            const auto& [e, c] = *b.terms_.begin();
            if (c != 1 && c != -1)
                throw error("variable '" + ctx_.names[i] +
                            "' occurs with negative exponent; binding coefficient is not a unit");
            Exps inv(e.size());
            for (std::size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
            // monomial() validates that no negative exponent lands in a
            // non-Laurent target variable
            inverses[i] = monomial(target, c, inv);
        }
        return *inverses[i];
    };

    // power tables, filled on demand and shared across terms
    std::vector<std::map<int, LaurentPoly>> powers(nv);
    auto power_of = [&](std::size_t i, int e) -> const LaurentPoly& {
        auto& cache = powers[i];
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        const LaurentPoly& base = e > 0 ? images[i] : inverse_of(i);
        int step = e > 0 ? 1 : -1;
        // start from the closest cached power of the same sign
        LaurentPoly acc = base;
        int have = step;
        for (int k = e - step; k != 0; k -= step) {
            if (auto jt = cache.find(k); jt != cache.end()) {
                acc = jt->second;
                have = k;
                break;
            }
        }
        cache.emplace(have, acc);
        while (have != e) {
            acc = acc * base;
            have += step;
            cache.emplace(have, acc);
        }
        return cache.at(e);
    };

    LaurentPoly out(target);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = constant(target, c);
        for (std::size_t i = 0; i < nv; ++i) {
            if (e[i] == 0) continue;
            t = t * power_of(i, e[i]);
        }
        out += t;
    }
    return out;
}

LaurentPoly LaurentPoly::cleared(const std::string& var) const {
    int i = ctx_.index_of(var);
    if (i < 0) throw error("unknown variable '" + var + "'");
    int mn = 0;
    for (const auto& [e, c] : terms_)
        if (e[i] < mn) mn = e[i];
    if (mn == 0) return *this;
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) {
        Exps e2 = e;
        e2[i] -= mn;
        r.terms_.emplace(e2, c);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_.names[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace knotcv
