#include "knotcv/factorint.hpp"

#include "knotcv/detail/zp_poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knotcv {

using detail::ZpPoly;

namespace {

// ---- integer divisor enumeration (trial division + primality test) ----

std::vector<Int> divisors_of(const Int& n0) {
    Int n = int_abs(n0);
    if (n == 0) throw error("divisors of zero requested");
    std::map<Int, int> fac;
    for (long p = 2; p <= 1000000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++fac[Int(p)];
            n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw resource_limit_error("cannot enumerate divisors: large composite cofactor " + n.get_str());
        ++fac[n];
    }
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t sz = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000)
            throw resource_limit_error("divisor enumeration exceeded budget");
    }
    return divs;
}

// ---- polynomials modulo a big prime power ----

using MPoly = std::vector<Int>;  // dense, coefficients in [0, mod)

void mp_trim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

MPoly mp_reduce(const UniPoly& f, const Int& mod) {
    MPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Int v = c % mod;
        if (v < 0) v += mod;
        r.push_back(v);
    }
    mp_trim(r);
    return r;
}

MPoly mp_from_zp(const ZpPoly& f) {
    MPoly r;
    r.reserve(f.c.size());
    for (long v : f.c) r.emplace_back(v);
    return r;
}

void mp_mod_coeffs(MPoly& a, const Int& mod) {
    for (auto& v : a) {
        v %= mod;
        if (v < 0) v += mod;
    }
    mp_trim(a);
}

MPoly mp_add(const MPoly& a, const MPoly& b, const Int& mod) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
        if (r[i] >= mod) r[i] -= mod;
    }
    mp_trim(r);
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, const Int& mod) {
    MPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) r[i] += mod;
    }
    mp_trim(r);
    return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b, const Int& mod) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    mp_mod_coeffs(r, mod);
    return r;
}

// division by a monic divisor
std::pair<MPoly, MPoly> mp_divmod_monic(const MPoly& a, const MPoly& b, const Int& mod) {
    if (b.empty() || b.back() != 1) throw error("internal: mp_divmod requires monic divisor");
    if (a.size() < b.size()) return {{}, a};
    MPoly rem = a;
    MPoly quot(a.size() - b.size() + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        Int q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        int shift = i - (static_cast<int>(b.size()) - 1);
        quot[static_cast<std::size_t>(shift)] = q;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto& v = rem[static_cast<std::size_t>(shift) + j];
            v = (v - q * b[j]) % mod;
            if (v < 0) v += mod;
        }
    }
    mp_trim(rem);
    mp_trim(quot);
    return {quot, rem};
}

// symmetric representative in (-mod/2, mod/2]
UniPoly mp_symmetric(const MPoly& a, const Int& mod) {
    std::vector<Int> c;
    c.reserve(a.size());
    Int half = mod / 2;
    for (const auto& v : a) c.push_back(v > half ? Int(v - mod) : v);
    return UniPoly(std::move(c));
}

// ---- Hensel lifting (quadratic, pairwise, recursive tree) ----

struct LiftPair {
    MPoly g, h, s, t;
    Int mod;
};

// One quadratic step: modulus m -> m^2, preserving f = g*h and s*g + t*h = 1.
void hensel_step(const MPoly& f, LiftPair& lp) {
    Int m2 = lp.mod * lp.mod;
    MPoly f2 = f;
    mp_mod_coeffs(f2, m2);
    MPoly& g = lp.g;
    MPoly& h = lp.h;
    MPoly& s = lp.s;
    MPoly& t = lp.t;
    MPoly e = mp_sub(f2, mp_mul(g, h, m2), m2);
    auto [q, r] = mp_divmod_monic(mp_mul(s, e, m2), h, m2);
    g = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
    h = mp_add(h, r, m2);
    MPoly one{Int(1)};
    MPoly b = mp_sub(mp_add(mp_mul(s, g, m2), mp_mul(t, h, m2), m2), one, m2);
    auto [c, d] = mp_divmod_monic(mp_mul(s, b, m2), h, m2);
    s = mp_sub(s, d, m2);
    t = mp_sub(t, mp_add(mp_mul(t, b, m2), mp_mul(c, g, m2), m2), m2);
    lp.mod = m2;
    // exactness is cheap to re-check and guards the whole verdict
    MPoly chk = mp_sub(f2, mp_mul(g, h, m2), m2);
    if (!chk.empty()) throw error("internal: Hensel step lost the factorization");
}

// Bezout cofactors of coprime g, h over F_p: s*g + t*h = 1.
std::pair<ZpPoly, ZpPoly> zp_bezout(const ZpPoly& g, const ZpPoly& h) {
    ZpPoly r0 = g, r1 = h;
    ZpPoly s0 = detail::zp_constant(g.p, 1), s1{g.p, {}};
    ZpPoly t0{g.p, {}}, t1 = detail::zp_constant(g.p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = detail::zp_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        ZpPoly s2 = detail::zp_sub(s0, detail::zp_mul(q, s1));
        s0 = s1;
        s1 = s2;
        ZpPoly t2 = detail::zp_sub(t0, detail::zp_mul(q, t1));
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw error("internal: factors not coprime mod p");
    long inv = 1;
    {
        // scale so that s*g + t*h = 1 exactly
        ZpPoly unit = r0;
        long u = unit.c[0];
        long tt = 0, nt = 1, rr = g.p, nr = u % g.p;
        while (nr != 0) {
            long qq = rr / nr;
            tt -= qq * nt;
            std::swap(tt, nt);
            rr -= qq * nr;
            std::swap(rr, nr);
        }
        inv = ((tt % g.p) + g.p) % g.p;
    }
    return {detail::zp_scale(s0, inv), detail::zp_scale(t0, inv)};
}

// Lifts the monic factorization F = prod(facs) mod p to modulus target
// (a power of p). F must be monic over Z.
std::vector<MPoly> hensel_lift_tree(const MPoly& f_target, const Int& target,
                                    const std::vector<ZpPoly>& facs, long p) {
    if (facs.size() == 1) {
        MPoly r = f_target;
        return {r};
    }
    std::size_t mid = facs.size() / 2;
    ZpPoly g0 = detail::zp_constant(p, 1), h0 = detail::zp_constant(p, 1);
    for (std::size_t i = 0; i < mid; ++i) g0 = detail::zp_mul(g0, facs[i]);
    for (std::size_t i = mid; i < facs.size(); ++i) h0 = detail::zp_mul(h0, facs[i]);
    auto [s0, t0] = zp_bezout(g0, h0);
    LiftPair lp{mp_from_zp(g0), mp_from_zp(h0), mp_from_zp(s0), mp_from_zp(t0), Int(p)};
    while (lp.mod < target) hensel_step(f_target, lp);
    // reduce to the common target modulus before recursing
    mp_mod_coeffs(lp.g, target);
    mp_mod_coeffs(lp.h, target);
    std::vector<ZpPoly> left(facs.begin(), facs.begin() + static_cast<long>(mid));
    std::vector<ZpPoly> right(facs.begin() + static_cast<long>(mid), facs.end());
    auto lg = hensel_lift_tree(lp.g, target, left, p);
    auto lh = hensel_lift_tree(lp.h, target, right, p);
    lg.insert(lg.end(), lh.begin(), lh.end());
    return lg;
}

// ---- recombination ----

constexpr unsigned long kSubsetBudget = 1UL << 20;

struct Recombiner {
    const UniPoly& F;            // monic over Z
    const std::vector<MPoly>& lifted;
    const Int& mod;
    const std::vector<bool>& allowed_degree;
    const Int bound;             // factor coefficient bound
    unsigned long tested = 0;
    std::optional<UniPoly> found;

    std::vector<int> degs;
    // suffix-feasible degree sums, suffix_feasible[i][d] = some subset of
    // factors i.. sums to degree d
    std::vector<std::vector<bool>> suffix_feasible;

    Recombiner(const UniPoly& F_, const std::vector<MPoly>& l, const Int& m,
               const std::vector<bool>& ad, Int b)
        : F(F_), lifted(l), mod(m), allowed_degree(ad), bound(std::move(b)) {
        degs.reserve(l.size());
        for (const auto& g : l) degs.push_back(static_cast<int>(g.size()) - 1);
        int n = F.degree();
        suffix_feasible.assign(l.size() + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
        suffix_feasible[l.size()][0] = true;
        for (std::size_t i = l.size(); i-- > 0;) {
            for (int d = 0; d <= n; ++d) {
                bool ok = suffix_feasible[i + 1][static_cast<std::size_t>(d)];
                if (!ok && d >= degs[i]) ok = suffix_feasible[i + 1][static_cast<std::size_t>(d - degs[i])];
                suffix_feasible[i][static_cast<std::size_t>(d)] = ok;
            }
        }
    }

    // can a strict extension from factor index i reach an allowed degree?
    bool completable(std::size_t i, int have, int maxdeg) const {
        for (int d = have + 1; d <= maxdeg; ++d)
            if (allowed_degree[static_cast<std::size_t>(d)] &&
                suffix_feasible[i][static_cast<std::size_t>(d - have)])
                return true;
        return false;
    }

    void test_candidate(const MPoly& prod) {
        if (++tested > kSubsetBudget)
            throw resource_limit_error("factor recombination exceeded subset budget");
        UniPoly g = mp_symmetric(prod, mod);
        for (const auto& c : g.coeffs())
            if (int_abs(c) > bound) return;
        if (g.degree() < 1 || g.degree() >= F.degree()) return;
        // quick screen: constant terms must divide
        const Int& g0 = g.coeff(0);
        if (g0 == 0) return;
        if (!mpz_divisible_p(F.coeff(0).get_mpz_t(), g0.get_mpz_t())) return;
        if (auto q = F.divide_exact(g)) {
            (void)q;
            found = g;
        }
    }

    // enumerates subsets in combination order; each subset is built and
    // tested exactly once
    void search(std::size_t start, int deg_have, const MPoly& prod, int target_max) {
        for (std::size_t i = start; i < lifted.size() && !found; ++i) {
            int d = deg_have + degs[i];
            if (d > target_max) continue;
            MPoly next = mp_mul(prod, lifted[i], mod);
            if (allowed_degree[static_cast<std::size_t>(d)]) {
                test_candidate(next);
                if (found) return;
            }
            if (completable(i + 1, d, target_max)) search(i + 1, d, next, target_max);
        }
    }
};

std::vector<long> sieve_primes_for(const UniPoly& f, int prime_count,
                                   std::vector<ModFactorDegrees>& transcript,
                                   std::map<long, std::vector<ZpPoly>>& factors_by_prime) {
    std::vector<long> chosen;
    long p = 2;
    int scanned = 0;
    while (static_cast<int>(chosen.size()) < prime_count && scanned < 300) {
        ++scanned;
        long prime = p;
        p = (p == 2) ? 3 : p + 2;
        // crude primality for small candidates
        bool isp = prime >= 2;
        for (long d = 2; d * d <= prime; ++d)
            if (prime % d == 0) {
                isp = false;
                break;
            }
        if (!isp) continue;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(prime))) continue;
        ZpPoly fp = detail::zp_reduce(f, prime);
        if (fp.degree() != f.degree()) continue;
        if (!detail::zp_is_squarefree(fp)) continue;
        auto facs = detail::zp_factor(fp);
        ModFactorDegrees md{prime, {}};
        std::vector<ZpPoly> polys;
        for (auto& fa : facs) {
            for (int k = 0; k < fa.multiplicity; ++k) md.degrees.push_back(fa.poly.degree());
            polys.push_back(fa.poly);
        }
        std::sort(md.degrees.begin(), md.degrees.end());
        transcript.push_back(md);
        factors_by_prime.emplace(prime, std::move(polys));
        chosen.push_back(prime);
    }
    return chosen;
}

std::vector<bool> degree_subset_sums(const std::vector<int>& degrees, int n) {
    std::vector<bool> s(static_cast<std::size_t>(n) + 1, false);
    s[0] = true;
    for (int d : degrees)
        for (int k = n; k >= d; --k)
            if (s[static_cast<std::size_t>(k - d)]) s[static_cast<std::size_t>(k)] = true;
    return s;
}

}  // namespace

std::vector<int> ModFactorization::degrees() const {
    std::vector<int> d;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (int k = 0; k < multiplicities[i]; ++k)
            d.push_back(static_cast<int>(factors[i].size()) - 1);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<RationalRoot> rational_roots(const UniPoly& p0) {
    if (p0.is_zero()) throw error("rational_roots of the zero polynomial");
    std::vector<RationalRoot> out;
    UniPoly p = p0;
    // strip powers of x
    int v = 0;
    while (p.coeff(0) == 0 && p.degree() > 0) {
        p = *p.divide_exact(UniPoly::x());
        ++v;
    }
    if (v > 0) out.push_back({Rat(0), true});
    if (p.degree() == 0) return out;
    std::set<std::pair<Int, Int>> seen;
    auto divs_u = divisors_of(p.coeff(0));
    auto divs_v = divisors_of(p.leading());
    for (const auto& u : divs_u) {
        for (const auto& den : divs_v) {
            if (int_gcd(u, den) != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Int num = sign ? Int(-u) : u;
                if (!seen.insert({num, den}).second) continue;
                if (p.has_rational_root(num, den)) {
                    Rat r(num, den);
                    r.canonicalize();
                    out.push_back({r, den == 1});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return out;
}

ModFactorization factor_mod_p(const UniPoly& p, long prime) {
    if (prime < 2) throw error("modulus must be a prime >= 2");
    if (p.is_zero()) throw error("cannot factor the zero polynomial");
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), static_cast<unsigned long>(prime)))
        throw error("prime divides the leading coefficient");
    ZpPoly fp = detail::zp_reduce(p, prime);
    auto facs = detail::zp_factor(fp);
    ModFactorization r{prime, {}, {}};
    for (auto& f : facs) {
        r.factors.push_back(f.poly.c);
        r.multiplicities.push_back(f.multiplicity);
    }
    return r;
}

IrreducibilityVerdict is_irreducible_Z(const UniPoly& input, int prime_count) {
    if (input.is_zero() || input.degree() == 0)
        throw error("is_irreducible_Z requires a nonconstant polynomial");
    UniPoly f = input.primitive_part();
    if (f.leading() < 0) f = -f;
    const int n = f.degree();

    IrreducibilityVerdict v;
    if (n == 1) {
        v.status = IrreducibilityVerdict::Status::Irreducible;
        v.method = "degree-1";
        return v;
    }

    // squarefree screen: a repeated factor is itself a witness
    UniPoly g = UniPoly::gcd(f, f.derivative());
    if (g.degree() >= 1) {
        v.status = IrreducibilityVerdict::Status::Reducible;
        v.witness = g;
        v.method = "squarefree-gcd";
        if (!input.divide_exact(g)) throw error("internal: squarefree witness does not divide");
        return v;
    }

    // rational-root screen; skipped (not fatal) if divisor enumeration is
    // out of reach, since the sieve and lifting decide on their own
    try {
        for (const auto& rr : rational_roots(f)) {
            UniPoly w(std::vector<Int>{Int(-rr.value.get_num()), Int(rr.value.get_den())});
            v.status = IrreducibilityVerdict::Status::Reducible;
            v.witness = w;
            v.method = "rational-root";
            if (!input.divide_exact(w)) throw error("internal: rational-root witness does not divide");
            return v;
        }
    } catch (const resource_limit_error&) {
    }

    // degree sieve across several good primes
    std::map<long, std::vector<ZpPoly>> factors_by_prime;
    auto primes = sieve_primes_for(f, prime_count, v.primes, factors_by_prime);
    if (primes.empty())
        throw resource_limit_error("no admissible prime found for the sieve");
    std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
    for (const auto& md : v.primes) {
        auto s = degree_subset_sums(md.degrees, n);
        for (int d = 0; d <= n; ++d)
            if (!s[static_cast<std::size_t>(d)]) allowed[static_cast<std::size_t>(d)] = false;
    }
    bool middle = false;
    for (int d = 1; d < n; ++d) middle = middle || allowed[static_cast<std::size_t>(d)];
    if (!middle) {
        v.status = IrreducibilityVerdict::Status::Irreducible;
        v.method = "degree-sieve";
        return v;
    }

    // Hensel lift at the prime with the fewest modular factors, then search
    // factor recombinations
    long best = primes[0];
    std::size_t best_count = factors_by_prime[best].size();
    for (long p : primes)
        if (factors_by_prime[p].size() < best_count) {
            best = p;
            best_count = factors_by_prime[p].size();
        }
    v.lift_prime = best;

    // monicize: F(x) = lc^(n-1) f(x/lc) is monic with integer coefficients;
    // factors of f are primitive parts of G(lc x) for monic factors G of F
    const Int lc = f.leading();
    std::vector<Int> Fc(f.coeffs());
    for (int i = 0; i < n; ++i)
        Fc[static_cast<std::size_t>(i)] *= int_pow(lc, static_cast<unsigned long>(n - 1 - i));
    Fc[static_cast<std::size_t>(n)] = 1;
    UniPoly F(std::move(Fc));

    // Landau-Mignotte style bound on coefficients of monic factors of F
    Int norm2 = 0;
    for (const auto& c : F.coeffs()) norm2 += c * c;
    Int bound = int_pow(Int(2), static_cast<unsigned long>(n)) * (int_sqrt(norm2) + 1);
    Int target = best;
    int k = 1;
    while (target <= 2 * bound) {
        target *= best;
        ++k;
    }
    v.lift_exponent = k;

    // factorization of F mod best: reuse f's factors transformed, or simply
    // refactor F mod best (same cost class)
    ZpPoly Fp = detail::zp_reduce(F, best);
    if (!detail::zp_is_squarefree(Fp))
        throw error("internal: monicized polynomial not squarefree mod lift prime");
    auto Ffacs_m = detail::zp_factor(Fp);
    std::vector<ZpPoly> Ffacs;
    for (auto& fa : Ffacs_m) Ffacs.push_back(fa.poly);

    MPoly Ftarget = mp_reduce(F, target);
    auto lifted = hensel_lift_tree(Ftarget, target, Ffacs, best);

    Recombiner rec(F, lifted, target, allowed, bound);
    MPoly one{Int(1)};
    rec.search(0, 0, one, n / 2);
    v.subsets_tested = rec.tested;
    v.method = "lift-recombine";
    if (rec.found) {
        // map the factor of F back to a factor of f
        UniPoly w = rec.found->compose_scale(lc).primitive_part();
        if (w.leading() < 0) w = -w;
        if (!input.divide_exact(w))
            throw error("internal: recombination witness does not divide");
        v.status = IrreducibilityVerdict::Status::Reducible;
        v.witness = w;
        return v;
    }
    v.status = IrreducibilityVerdict::Status::Irreducible;
    return v;
}

}  // namespace knotcv
