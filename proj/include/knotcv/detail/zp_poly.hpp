#pragma once

#include "knotcv/unipoly.hpp"

#include <utility>
#include <vector>

namespace knotcv::detail {

// Dense polynomial over F_p for word-sized p. Coefficients in [0, p).
struct ZpPoly {
    long p = 0;
    std::vector<long> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    long leading() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

ZpPoly zp_reduce(const UniPoly& f, long p);
ZpPoly zp_constant(long p, long v);
ZpPoly zp_x(long p);

ZpPoly zp_add(const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_scale(const ZpPoly& a, long s);
ZpPoly zp_monic(const ZpPoly& a);
// quotient, remainder
std::pair<ZpPoly, ZpPoly> zp_divmod(const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b);
ZpPoly zp_gcd(ZpPoly a, ZpPoly b);  // monic
ZpPoly zp_derivative(const ZpPoly& a);
// base^e mod f, with arbitrary-precision exponent
ZpPoly zp_powmod(const ZpPoly& base, const Int& e, const ZpPoly& f);

struct ZpFactor {
    ZpPoly poly;  // monic irreducible
    int multiplicity;
};

// Complete factorization over F_p (squarefree decomposition, then
// distinct-degree and equal-degree splitting). Deterministically seeded.
std::vector<ZpFactor> zp_factor(const ZpPoly& f);

bool zp_is_squarefree(const ZpPoly& f);

}  // namespace knotcv::detail
