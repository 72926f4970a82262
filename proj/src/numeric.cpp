#include "knotcv/numeric.hpp"

#include "knotcv/family.hpp"
#include "knotcv/word.hpp"

#include <algorithm>
#include <cmath>

namespace knotcv {

namespace {

using CLD = std::complex<long double>;

long double to_long_double(const Int& z) {
    // two-term split recovers ~106 bits of the integer
    double hi = z.get_d();
    Int rest = z - Int(hi);
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

CLD horner(const std::vector<CLD>& c, CLD z) {
    CLD acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// ---- complex arithmetic over GMP floats, for polish and residuals ----

constexpr mp_bitcnt_t kPrec = 256;

struct CF {
    mpf_class re{0, kPrec}, im{0, kPrec};
};

CF cf_from(std::complex<long double> z) {
    CF r;
    r.re = static_cast<double>(z.real());
    r.im = static_cast<double>(z.imag());
    // second-order refinement of the long double parts
    r.re += static_cast<double>(z.real() - static_cast<long double>(static_cast<double>(z.real())));
    r.im += static_cast<double>(z.imag() - static_cast<long double>(static_cast<double>(z.imag())));
    return r;
}

CF cf_add(const CF& a, const CF& b) {
    CF r;
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}

CF cf_sub(const CF& a, const CF& b) {
    CF r;
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

CF cf_mul(const CF& a, const CF& b) {
    CF r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

CF cf_div(const CF& a, const CF& b) {
    mpf_class d(b.re * b.re + b.im * b.im, kPrec);
    CF r;
    r.re = (a.re * b.re + a.im * b.im) / d;
    r.im = (a.im * b.re - a.re * b.im) / d;
    return r;
}

mpf_class cf_abs(const CF& a) {
    mpf_class n(a.re * a.re + a.im * a.im, kPrec);
    mpf_class r(0, kPrec);
    mpf_sqrt(r.get_mpf_t(), n.get_mpf_t());
    return r;
}

CF cf_horner(const std::vector<CF>& c, const CF& z) {
    CF acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = cf_add(cf_mul(acc, z), *it);
    return acc;
}

std::complex<double> cf_to_double(const CF& a) {
    return {a.re.get_d(), a.im.get_d()};
}

}  // namespace

RootSet find_roots(const UniPoly& input, double tolerance, int max_iterations) {
    if (input.degree() < 1) throw error("find_roots requires a nonconstant polynomial");
    UniPoly p = input.squarefree_part();
    const int d = p.degree();

    RootSet rs;
    rs.polynomial = p;
    rs.tolerance = tolerance;

    std::vector<CLD> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = CLD(to_long_double(p.coeff(i)));
    std::vector<CLD> dc(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        dc[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] * CLD(static_cast<long double>(i));

    // Fujiwara bound for the initial circle
    long double lead = std::abs(c.back());
    long double radius = 0;
    for (int i = 0; i < d; ++i) {
        long double a = std::abs(c[static_cast<std::size_t>(i)]) / lead;
        if (a > 0) radius = std::max(radius, std::pow(a, 1.0L / (d - i)));
    }
    radius = 2 * std::max(radius, 0.5L);

    std::vector<CLD> z(static_cast<std::size_t>(d));
    const long double pi = 3.14159265358979323846L;
    for (int k = 0; k < d; ++k) {
        long double ang = 2 * pi * k / d + 0.4L;
        z[static_cast<std::size_t>(k)] = radius * CLD(std::cos(ang), std::sin(ang));
    }

    // Aberth-Ehrlich simultaneous iteration
    bool converged = false;
    for (int iter = 0; iter < max_iterations && !converged; ++iter) {
        long double worst = 0;
        for (int k = 0; k < d; ++k) {
            CLD zk = z[static_cast<std::size_t>(k)];
            CLD pv = horner(c, zk);
            CLD dv = horner(dc, zk);
            if (std::abs(dv) == 0) {
                z[static_cast<std::size_t>(k)] = zk + CLD(1e-6L, 1e-6L);
                worst = 1;
                continue;
            }
            CLD w = pv / dv;
            CLD sum(0);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                sum += CLD(1) / (zk - z[static_cast<std::size_t>(j)]);
            }
            CLD corr = w / (CLD(1) - w * sum);
            z[static_cast<std::size_t>(k)] = zk - corr;
            worst = std::max(worst, std::abs(corr) / (1 + std::abs(zk)));
        }
        converged = worst < 1e-16L;
    }

    // extended-precision Newton polish and residuals against exact coefficients
    std::vector<CF> cf(static_cast<std::size_t>(d) + 1), dcf(static_cast<std::size_t>(d));
    Int maxcoeff = 0;
    for (int i = 0; i <= d; ++i) {
        cf[static_cast<std::size_t>(i)].re = mpf_class(p.coeff(i), kPrec);
        maxcoeff = std::max(maxcoeff, int_abs(p.coeff(i)));
    }
    for (int i = 1; i <= d; ++i) {
        dcf[static_cast<std::size_t>(i - 1)].re = mpf_class(p.coeff(i) * i, kPrec);
    }
    mpf_class scale(maxcoeff, kPrec);

    for (int k = 0; k < d; ++k) {
        CF zk = cf_from(z[static_cast<std::size_t>(k)]);
        for (int it = 0; it < 80; ++it) {
            CF pv = cf_horner(cf, zk);
            CF dv = cf_horner(dcf, zk);
            if (cf_abs(dv) == 0) break;
            CF step = cf_div(pv, dv);
            zk = cf_sub(zk, step);
            mpf_class rel = cf_abs(step) / (1 + cf_abs(zk));
            if (rel < mpf_class(1e-60, kPrec)) break;
        }
        mpf_class resid = cf_abs(cf_horner(cf, zk)) / scale;
        rs.roots.push_back(cf_to_double(zk));
        rs.residuals.push_back(resid.get_d());
    }

    double worst = 0;
    for (double r : rs.residuals) worst = std::max(worst, r);
    if (worst > tolerance)
        throw error("root finding exhausted its iteration budget before reaching tolerance");

    // stable order: by real part, then imaginary part
    std::vector<std::size_t> idx(rs.roots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (rs.roots[a].real() != rs.roots[b].real()) return rs.roots[a].real() < rs.roots[b].real();
        return rs.roots[a].imag() < rs.roots[b].imag();
    });
    RootSet out;
    out.polynomial = rs.polynomial;
    out.tolerance = tolerance;
    for (std::size_t i : idx) {
        out.roots.push_back(rs.roots[i]);
        out.residuals.push_back(rs.residuals[i]);
    }
    return out;
}

namespace {

Mat2<CLD> j3_power_ld(int n, CLD q) {
    Mat2<CLD> a{CLD(1), CLD(1), CLD(0), CLD(1)};
    Mat2<CLD> b{CLD(1), CLD(0), -q, CLD(1)};
    Mat2<CLD> w = eval_word(j3_family().word(), a, b);
    return matrix_power_recursive(w, n);
}

}  // namespace

Mat2<std::complex<double>> j3_power_numeric(int n, std::complex<double> q) {
    Mat2<CLD> m = j3_power_ld(n, CLD(q.real(), q.imag()));
    auto cast = [](CLD v) { return std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag())); };
    return {cast(m.e11), cast(m.e12), cast(m.e21), cast(m.e22)};
}

ParabolicResiduals verify_parabolic_conditions(int n, std::complex<double> q) {
    CLD qq(q.real(), q.imag());
    Mat2<CLD> wn = j3_power_ld(n, qq);
    long double r1 = std::abs(wn.e22);
    long double r2 = std::abs(qq * wn.e12 * wn.e12 - CLD(1));
    return {static_cast<double>(r1), static_cast<double>(r2)};
}

std::vector<CuspResidual> verify_cusp_relation(int n) {
    if (n >= 0) throw error("verify_cusp_relation is defined for n < 0");
    RootSet rs = find_roots(reducible_slice(j3_family(), n));
    std::vector<CuspResidual> out;
    for (const auto& root : rs.roots) {
        if (std::abs(root) < 1e-8 || std::abs(root + 1.0) < 1e-8)
            throw error("cusp relation undefined at q = 0 or q = -1");
        CLD q(root.real(), root.imag());
        Mat2<CLD> wn = j3_power_ld(n, q);
        CLD alpha = CLD(2) * wn.e11 * wn.e12;
        CLD rel = alpha + alpha * q + CLD(2) * q + CLD(6);
        out.push_back({root, std::complex<double>(static_cast<double>(alpha.real()),
                                                  static_cast<double>(alpha.imag())),
                       static_cast<double>(std::abs(rel))});
    }
    return out;
}

Mat2<std::complex<double>> longitude_holonomy(int n, std::complex<double> q) {
    CLD qq(q.real(), q.imag());
    Mat2<CLD> wn = j3_power_ld(n, qq);
    CLD diag = wn.e11 * wn.e22 - qq * wn.e12 * wn.e12;
    Mat2<CLD> m1{diag, CLD(2) * wn.e11 * wn.e12, CLD(-2) * qq * wn.e11 * wn.e22, diag};
    Mat2<CLD> m2{CLD(1), CLD(static_cast<long double>(-2 * n)), CLD(0), CLD(1)};
    Mat2<CLD> lam = m1 * m2;
    auto cast = [](CLD v) { return std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag())); };
    return {cast(lam.e11), cast(lam.e12), cast(lam.e21), cast(lam.e22)};
}

}  // namespace knotcv
