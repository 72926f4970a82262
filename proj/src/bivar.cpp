#include "knotcv/bivar.hpp"

namespace knotcv {

const VarContext& xz_context() {
    static const VarContext ctx{{"x", "z"}, {false, false}};
    return ctx;
}

const VarContext& mq_context() {
    static const VarContext ctx{{"m", "q"}, {true, false}};
    return ctx;
}

BivarPoly::BivarPoly(LaurentPoly p) : p_(std::move(p)) {
    if (!(p_.context() == xz_context())) throw error("BivarPoly requires the (x, z) context");
}

BivarPoly BivarPoly::term(Int c, int dx, int dz) {
    if (dx < 0 || dz < 0) throw error("BivarPoly exponents must be nonnegative");
    return BivarPoly(LaurentPoly::monomial(xz_context(), std::move(c), {dx, dz}));
}

UniPoly BivarPoly::diagonal() const {
    UniPoly r;
    for (const auto& [e, c] : p_.terms())
        r += UniPoly::monomial(c, e[0] + e[1]);
    return r;
}

UniPoly BivarPoly::parabolic_slice() const {
    // cache powers of (2 - q) up to the max z-degree
    int maxz = 0;
    for (const auto& [e, c] : p_.terms()) maxz = std::max(maxz, e[1]);
    std::vector<UniPoly> zpow;
    zpow.reserve(static_cast<std::size_t>(maxz) + 1);
    zpow.push_back(UniPoly::constant(1));
    UniPoly two_minus_q({2, -1});
    for (int j = 1; j <= maxz; ++j) zpow.push_back(zpow.back() * two_minus_q);
    UniPoly r;
    for (const auto& [e, c] : p_.terms())
        r += zpow[static_cast<std::size_t>(e[1])] * (c * int_pow(2, static_cast<unsigned long>(e[0])));
    return r;
}

LaurentPoly BivarPoly::to_mq() const {
    const VarContext& mq = mq_context();
    LaurentPoly xv = LaurentPoly::monomial(mq, 1, {2, 0}) + LaurentPoly::monomial(mq, 1, {-2, 0});
    LaurentPoly zv = xv - LaurentPoly::variable(mq, "q");
    return p_.substitute({{"x", xv}, {"z", zv}}, mq);
}

}  // namespace knotcv
