#include "knotcv/detail/zp_poly.hpp"

#include <algorithm>
#include <random>

namespace knotcv::detail {

namespace {

long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw error("element not invertible mod p");
    return ((t % p) + p) % p;
}

}  // namespace

ZpPoly zp_reduce(const UniPoly& f, long p) {
    ZpPoly r{p, {}};
    r.c.reserve(f.coeffs().size());
    Int pm(p);
    for (const auto& a : f.coeffs()) {
        Int m = a % pm;
        if (m < 0) m += pm;
        r.c.push_back(m.get_si());
    }
    r.trim();
    return r;
}

ZpPoly zp_constant(long p, long v) {
    v = ((v % p) + p) % p;
    ZpPoly r{p, {}};
    if (v != 0) r.c.push_back(v);
    return r;
}

ZpPoly zp_x(long p) { return ZpPoly{p, {0, 1}}; }

ZpPoly zp_add(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly r{a.p, std::vector<long>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
    r.trim();
    return r;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b) {
    ZpPoly r{a.p, std::vector<long>(std::max(a.c.size(), b.c.size()), 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = ((r.c[i] - b.c[i]) % a.p + a.p) % a.p;
    r.trim();
    return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZpPoly{a.p, {}};
    ZpPoly r{a.p, std::vector<long>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + static_cast<long long>(a.c[i]) * b.c[j]) % a.p;
    }
    r.trim();
    return r;
}

ZpPoly zp_scale(const ZpPoly& a, long s) {
    s = ((s % a.p) + a.p) % a.p;
    ZpPoly r{a.p, a.c};
    for (auto& v : r.c) v = static_cast<long long>(v) * s % a.p;
    r.trim();
    return r;
}

ZpPoly zp_monic(const ZpPoly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return zp_scale(a, mod_inverse(a.leading(), a.p));
}

std::pair<ZpPoly, ZpPoly> zp_divmod(const ZpPoly& a, const ZpPoly& b) {
    if (b.is_zero()) throw error("division by zero polynomial mod p");
    if (a.degree() < b.degree()) return {ZpPoly{a.p, {}}, a};
    long inv = mod_inverse(b.leading(), a.p);
    ZpPoly rem = a;
    ZpPoly quot{a.p, std::vector<long>(a.c.size() - b.c.size() + 1, 0)};
    for (int i = rem.degree(); i >= b.degree(); --i) {
        long coef = rem.c[static_cast<std::size_t>(i)];
        if (coef == 0) continue;
        long q = static_cast<long long>(coef) * inv % a.p;
        int shift = i - b.degree();
        quot.c[static_cast<std::size_t>(shift)] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& v = rem.c[static_cast<std::size_t>(j + shift)];
            v = ((v - static_cast<long long>(q) * b.c[static_cast<std::size_t>(j)]) % a.p + a.p) % a.p;
        }
    }
    rem.trim();
    quot.trim();
    return {quot, rem};
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b) { return zp_divmod(a, b).second; }

ZpPoly zp_gcd(ZpPoly a, ZpPoly b) {
    while (!b.is_zero()) {
        ZpPoly r = zp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a);
}

ZpPoly zp_derivative(const ZpPoly& a) {
    ZpPoly r{a.p, {}};
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = static_cast<long long>(a.c[i]) * (static_cast<long>(i) % a.p) % a.p;
    r.trim();
    return r;
}

ZpPoly zp_powmod(const ZpPoly& base, const Int& e, const ZpPoly& f) {
    ZpPoly result = zp_constant(f.p, 1);
    ZpPoly b = zp_mod(base, f);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = zp_mod(zp_mul(result, result), f);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_mod(zp_mul(result, b), f);
    }
    return result;
}

bool zp_is_squarefree(const ZpPoly& f) {
    ZpPoly d = zp_derivative(f);
    if (d.is_zero()) return f.degree() == 0;
    return zp_gcd(f, d).degree() == 0;
}

namespace {

// p-th root of g in F_p[x] when g = h(x^p): coefficient a at index i*p maps
// to index i (Frobenius fixes F_p).
ZpPoly zp_pth_root(const ZpPoly& g) {
    ZpPoly r{g.p, {}};
    r.c.resize(g.c.size() / static_cast<std::size_t>(g.p) + 1, 0);
    for (std::size_t i = 0; i < g.c.size(); ++i) {
        if (g.c[i] == 0) continue;
        if (i % static_cast<std::size_t>(g.p) != 0)
            throw error("internal: polynomial is not a p-th power");
        r.c[i / static_cast<std::size_t>(g.p)] = g.c[i];
    }
    r.trim();
    return r;
}

void squarefree_decompose(const ZpPoly& f, int mult, std::vector<std::pair<ZpPoly, int>>& out) {
    // Yun-style decomposition adapted to characteristic p.
    if (f.degree() <= 0) return;
    ZpPoly fp = zp_derivative(f);
    if (fp.is_zero()) {
        squarefree_decompose(zp_pth_root(f), mult * static_cast<int>(f.p), out);
        return;
    }
    ZpPoly g = zp_gcd(f, fp);
    ZpPoly w = zp_divmod(f, g).first;
    int i = 1;
    while (w.degree() > 0) {
        ZpPoly y = zp_gcd(w, g);
        ZpPoly z = zp_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(zp_monic(z), mult * i);
        w = std::move(y);
        g = zp_divmod(g, w).first;
        ++i;
    }
    if (g.degree() > 0) squarefree_decompose(zp_pth_root(g), mult * static_cast<int>(f.p), out);
}

// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree product of
// irreducibles all of degree d.
void edf(const ZpPoly& f, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(zp_monic(f));
        return;
    }
    const long p = f.p;
    while (true) {
        ZpPoly a{p, std::vector<long>(static_cast<std::size_t>(f.degree()), 0)};
        for (auto& v : a.c) v = static_cast<long>(rng() % static_cast<unsigned long>(p));
        a.trim();
        if (a.degree() < 1) continue;
        ZpPoly h;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            ZpPoly t = a, s = a;
            for (int i = 1; i < d; ++i) {
                s = zp_mod(zp_mul(s, s), f);
                t = zp_add(t, s);
            }
            h = zp_gcd(t, f);
        } else {
            Int e = (int_pow(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
            ZpPoly b = zp_powmod(a, e, f);
            h = zp_gcd(zp_sub(b, zp_constant(p, 1)), f);
        }
        if (h.degree() > 0 && h.degree() < f.degree()) {
            edf(h, d, rng, out);
            edf(zp_divmod(f, h).first, d, rng, out);
            return;
        }
    }
}

// Distinct-degree splitting of a monic squarefree polynomial.
void ddf(ZpPoly f, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
    const long p = f.p;
    ZpPoly h = zp_x(p);  // x^(p^d) mod f, incrementally
    int d = 0;
    while (f.degree() > 2 * (d + 1) - 1) {
        ++d;
        h = zp_powmod(h, Int(p), f);
        ZpPoly g = zp_gcd(zp_sub(h, zp_x(p)), f);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            f = zp_divmod(f, g).first;
            h = zp_mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(zp_monic(f));
}

}  // namespace

std::vector<ZpFactor> zp_factor(const ZpPoly& f0) {
    if (f0.is_zero()) throw error("cannot factor the zero polynomial mod p");
    ZpPoly f = zp_monic(f0);
    std::vector<ZpFactor> result;
    if (f.degree() == 0) return result;
    std::vector<std::pair<ZpPoly, int>> sqf;
    squarefree_decompose(f, 1, sqf);
    // deterministic seed from the input for reproducible transcripts
    unsigned long long seed = 0x9e3779b97f4a7c15ULL ^ static_cast<unsigned long long>(f.p);
    for (long v : f0.c) seed = seed * 1099511628211ULL + static_cast<unsigned long long>(v);
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : sqf) {
        std::vector<ZpPoly> irr;
        ddf(part, rng, irr);
        for (auto& g : irr) result.push_back({std::move(g), mult});
    }
    std::sort(result.begin(), result.end(), [](const ZpFactor& a, const ZpFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.c < b.poly.c;
    });
    return result;
}

}  // namespace knotcv::detail
