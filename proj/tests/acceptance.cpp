// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
#include "knotcv/criterion.hpp"
#include "knotcv/factorint.hpp"
#include "knotcv/family.hpp"
#include "knotcv/numeric.hpp"
#include "knotcv/twobridge.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace knotcv;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, double seconds) {
    std::printf("%s  %2d. %s (%.2fs)\n", ok ? "PASS" : "FAIL", index, what.c_str(), seconds);
    if (!ok) ++failures;
}

template <class F>
void criterion(int index, const std::string& what, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(index, what + (note.empty() ? "" : " [" + note + "]"), ok, seconds);
}

bool crit_diagonal() { return diagonal_closed_form_check(-50, 50); }

bool crit_substitution() {
    for (const Family* f : {&twist_family(), &j3_family()})
        for (int n = -20; n <= 20; ++n)
            if (!(char_poly(*f, n).to_mq() == riley_poly(*f, n))) return false;
    return true;
}

bool crit_matrix_recursion() {
    LaurentPoly mdiff = LaurentPoly::monomial(mq_context(), 1, {1, 0}) -
                        LaurentPoly::monomial(mq_context(), 1, {-1, 0});
    for (const Family* f : {&twist_family(), &j3_family()}) {
        Mat2<LaurentPoly> w = eval_word(f->word(), Family::meridian_a(), Family::meridian_b());
        Mat2<LaurentPoly> winv = w.adjugate();
        for (int n = -8; n <= 8; ++n) {
            Mat2<LaurentPoly> rec = matrix_power_recursive(w, n);
            Mat2<LaurentPoly> direct = identity_like(w);
            for (int k = 0; k < (n >= 0 ? n : -n); ++k) direct = direct * (n >= 0 ? w : winv);
            if (!(rec == direct)) return false;
            if (!(riley_poly(*f, n) == mdiff * rec.e12 + rec.e22)) return false;
        }
    }
    return true;
}

bool crit_degenerate_locus() {
    LaurentPoly mdiff = LaurentPoly::monomial(mq_context(), 1, {1, 0}) -
                        LaurentPoly::monomial(mq_context(), 1, {-1, 0});
    LaurentPoly locus = mdiff * mdiff;
    for (const Family* f : {&twist_family(), &j3_family()})
        for (int n = -20; n <= 20; ++n)
            if (!riley_poly(*f, n).substitute({{"q", locus}}, mq_context()).is_one()) return false;
    return true;
}

bool crit_degrees() {
    for (int n = -20; n <= -1; ++n) {
        if (char_poly(twist_family(), n).total_degree() != -2 * n) return false;
        if (reducible_slice(twist_family(), n).degree() != -2 * n) return false;
        if (char_poly(j3_family(), n).total_degree() != -3 * n) return false;
        if (reducible_slice(j3_family(), n).degree() != -3 * n) return false;
        UniPoly d = diagonal_poly(j3_family(), n);
        if (d.degree() != -n || d.leading() != 2) return false;
    }
    return true;
}

bool crit_irreducibility() {
    for (int n = -16; n <= 16; ++n) {
        if (n == 0 || n == 1) continue;
        if (!is_irreducible_Z(reducible_slice(twist_family(), n)).irreducible()) return false;
    }
    for (int n = -12; n <= -1; ++n)
        if (!is_irreducible_Z(reducible_slice(j3_family(), n)).irreducible()) return false;
    return true;
}

bool crit_criterion() {
    for (int n = -10; n <= 10; ++n) {
        auto rep = check_commensurability(twist_family(), n);
        bool excluded = n == 0 || n == 1 || n == -1;
        bool concluded =
            rep.conclusion == CommensurabilityReport::Conclusion::NotCommensurableToFibered;
        if (concluded == excluded) return false;
    }
    for (int n = -12; n <= -1; ++n) {
        auto rep = check_commensurability(j3_family(), n);
        if (rep.conclusion != CommensurabilityReport::Conclusion::NotCommensurableToFibered)
            return false;
    }
    return true;
}

bool crit_numeric() {
    for (int n = -8; n <= -1; ++n) {
        auto rs = find_roots(reducible_slice(j3_family(), n));
        for (auto q : rs.roots) {
            auto res = verify_parabolic_conditions(n, q);
            if (res.w22_abs >= 1e-9 || res.det_relation >= 1e-9) return false;
            auto wn = j3_power_numeric(n, q);
            std::complex<double> alpha = 2.0 * wn.e11 * wn.e12;
            if (std::abs(q) < 1e-8 || std::abs(q + 1.0) < 1e-8) continue;
            if (std::abs(alpha + alpha * q + 2.0 * q + 6.0) >= 1e-9) return false;
            auto lam = longitude_holonomy(n, q);
            if (std::abs(lam.e11 + 1.0) >= 1e-8 || std::abs(lam.e21) >= 1e-8 ||
                std::abs(lam.e22 + 1.0) >= 1e-8 ||
                std::abs(lam.e12 - (alpha + 2.0 * n)) >= 1e-8)
                return false;
        }
    }
    return true;
}

bool crit_fractions() {
    for (int n = 1; n <= 30; ++n) {
        auto [f1, f2] = j3_fraction(n);  // internal continued-fraction cross-checks
        if (!(f1 == Fraction::normalize(4LL * n - 1, 6LL * n - 1))) return false;
        if (!(f2 == Fraction::normalize(6LL * n - 4, 6LL * n - 1))) return false;
        if (!fractions_equivalent(f1, f2)) return false;
        if (!(continued_fraction_value({1, -2, -2LL * n}) == f1)) return false;
    }
    return true;
}

bool crit_alexander() {
    for (int n = -10; n <= -1; ++n) {
        UniPoly d = alexander_j3(n);
        if (d.degree() != -2 * n || d.is_monic()) return false;
        if (d.coeff(0) != 2 || d.leading() != 2) return false;
        for (int i = 1; i < d.degree(); ++i)
            if (d.coeff(i) != (i % 2 ? -3 : 3)) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "twist diagonal r_n(x,x) = n*x - (2n-1), -50 <= n <= 50, exact", crit_diagonal);
    criterion(2, "substitution x,z -> m,q maps r_n onto R_n, both families, |n| <= 20, exact",
              crit_substitution);
    criterion(3, "R_n = (m - 1/m) w12 + w22 with w^n from recursion and direct product, |n| <= 8",
              crit_matrix_recursion);
    criterion(4, "degenerate locus R_n(m, (m - 1/m)^2) = 1, |n| <= 20, exact",
              crit_degenerate_locus);
    criterion(5, "degrees -2n (twist) / -3n (j3) and j3 diagonal leading term 2x^-n, n in [-20,-1]",
              crit_degrees);
    criterion(6, "slice irreducible over Z: twist n in [-16,-1] u [2,16], j3 n in [-12,-1]",
              crit_irreducibility);
    criterion(7, "criterion: twist [-10,10] minus {0,1,-1} and j3 [-12,-1] not commensurable "
                 "to fibered, excluded indices inapplicable",
              crit_criterion);
    criterion(8, "numeric: |w22| and |q w12^2 - 1| < 1e-9, cusp relation < 1e-9, longitude "
                 "holonomy within 1e-8, j3 n in [-8,-1]",
              crit_numeric);
    criterion(9, "continued fractions reproduce (4n-1)/(6n-1) ~ (6n-4)/(6n-1), n in [1,30], exact",
              crit_fractions);
    criterion(10, "Alexander polynomial of J(3,2n): coefficients 2,-3,3,...,-3,2 and non-monic, "
                  "n in [-10,-1]",
              crit_alexander);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
