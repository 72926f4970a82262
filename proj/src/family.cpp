#include "knotcv/family.hpp"

namespace knotcv {

namespace {

LaurentPoly mq_mono(Int c, int em, int eq) {
    return LaurentPoly::monomial(mq_context(), std::move(c), {em, eq});
}

BivarPoly xz(Int c, int dx, int dz) { return BivarPoly::term(std::move(c), dx, dz); }

}  // namespace

Mat2<LaurentPoly> Family::meridian_a() {
    return {mq_mono(1, 1, 0), mq_mono(1, 0, 0), LaurentPoly(mq_context()), mq_mono(1, -1, 0)};
}

Mat2<LaurentPoly> Family::meridian_b() {
    return {mq_mono(1, 1, 0), LaurentPoly(mq_context()), mq_mono(-1, 0, 1), mq_mono(1, -1, 0)};
}

Family::Family(std::string name, GroupWord word, LaurentPoly trace_mq, BivarPoly trace_xz,
               LaurentPoly riley0, LaurentPoly riley1, BivarPoly char0, BivarPoly char1)
    : name_(std::move(name)),
      word_(std::move(word)),
      trace_mq_(std::move(trace_mq)),
      trace_xz_(std::move(trace_xz)),
      riley_seed0_(std::move(riley0)),
      riley_seed1_(std::move(riley1)),
      char_seed0_(std::move(char0)),
      char_seed1_(std::move(char1)) {
    // the (x,z) data must be the (m,q) data under x = m^2 + 1/m^2,
    // z = m^2 + 1/m^2 - q
    if (!(trace_xz_.to_mq() == trace_mq_))
        throw error("family '" + name_ + "': trace polynomials disagree under substitution");
    if (!(char_seed0_.to_mq() == riley_seed0_) || !(char_seed1_.to_mq() == riley_seed1_))
        throw error("family '" + name_ + "': recursion seeds disagree under substitution");
    // w must carry the expected trace
    Mat2<LaurentPoly> w = eval_word(word_, meridian_a(), meridian_b());
    if (!(w.trace() == trace_mq_))
        throw error("family '" + name_ + "': word trace does not match trace polynomial");
}

LaurentPoly Family::riley(int n) const {
    std::scoped_lock lock(mu_);
    if (riley_cache_.empty()) {
        riley_cache_.emplace(0, riley_seed0_);
        riley_cache_.emplace(1, riley_seed1_);
    }
    auto it = riley_cache_.find(n);
    if (it != riley_cache_.end()) return it->second;
    if (n > 1) {
        int k = riley_cache_.rbegin()->first;
        for (; k < n; ++k) {
            const LaurentPoly& rk = riley_cache_.at(k);
            const LaurentPoly& rk1 = riley_cache_.at(k - 1);
            riley_cache_.emplace(k + 1, trace_mq_ * rk - rk1);
        }
    } else {
        int k = riley_cache_.begin()->first;
        for (; k > n; --k) {
            const LaurentPoly& rk = riley_cache_.at(k);
            const LaurentPoly& rk1 = riley_cache_.at(k + 1);
            riley_cache_.emplace(k - 1, trace_mq_ * rk - rk1);
        }
    }
    return riley_cache_.at(n);
}

BivarPoly Family::char_poly(int n) const {
    std::scoped_lock lock(mu_);
    if (char_cache_.empty()) {
        char_cache_.emplace(0, char_seed0_);
        char_cache_.emplace(1, char_seed1_);
    }
    auto it = char_cache_.find(n);
    if (it != char_cache_.end()) return it->second;
    if (n > 1) {
        int k = char_cache_.rbegin()->first;
        for (; k < n; ++k)
            char_cache_.emplace(k + 1, trace_xz_ * char_cache_.at(k) - char_cache_.at(k - 1));
    } else {
        int k = char_cache_.begin()->first;
        for (; k > n; --k)
            char_cache_.emplace(k - 1, trace_xz_ * char_cache_.at(k) - char_cache_.at(k + 1));
    }
    return char_cache_.at(n);
}

const Family& twist_family() {
    static const Family f = [] {
        GroupWord w = parse_word("(bABa)^-1");
        // T = 2 + (2 - m^2 - 1/m^2) q + q^2
        LaurentPoly T = mq_mono(2, 0, 0) + mq_mono(2, 0, 1) + mq_mono(-1, 2, 1) +
                        mq_mono(-1, -2, 1) + mq_mono(1, 0, 2);
        // t = 2 + 2x - 2z - xz + z^2
        BivarPoly t = xz(2, 0, 0) + xz(2, 1, 0) + xz(-2, 0, 1) + xz(-1, 1, 1) + xz(1, 0, 2);
        LaurentPoly R0 = mq_mono(1, 0, 0);
        // R1 = -1 + m^2 + 1/m^2 - q
        LaurentPoly R1 = mq_mono(-1, 0, 0) + mq_mono(1, 2, 0) + mq_mono(1, -2, 0) + mq_mono(-1, 0, 1);
        BivarPoly r0 = xz(1, 0, 0);
        BivarPoly r1 = xz(1, 0, 1) - xz(1, 0, 0);  // z - 1
        return Family("twist", std::move(w), std::move(T), std::move(t), std::move(R0),
                      std::move(R1), std::move(r0), std::move(r1));
    }();
    return f;
}

const Family& j3_family() {
    static const Family f = [] {
        GroupWord word = parse_word("aBabAb");
        Mat2<LaurentPoly> w = eval_word(word, Family::meridian_a(), Family::meridian_b());
        LaurentPoly T = w.trace();
        LaurentPoly m_minus_inv = mq_mono(1, 1, 0) + mq_mono(-1, -1, 0);
        LaurentPoly R1 = m_minus_inv * w.e12 + w.e22;
        LaurentPoly R0 = mq_mono(1, 0, 0);
        // t = -4x - 2x^2 + 5z + 6xz + x^2 z - 4z^2 - 2xz^2 + z^3
        BivarPoly t = xz(-4, 1, 0) + xz(-2, 2, 0) + xz(5, 0, 1) + xz(6, 1, 1) + xz(1, 2, 1) +
                      xz(-4, 0, 2) + xz(-2, 1, 2) + xz(1, 0, 3);
        BivarPoly r0 = xz(1, 0, 0);
        // r1 = 3 + 2x - 3z - xz + z^2
        BivarPoly r1 = xz(3, 0, 0) + xz(2, 1, 0) + xz(-3, 0, 1) + xz(-1, 1, 1) + xz(1, 0, 2);
        return Family("j3", std::move(word), std::move(T), std::move(t), std::move(R0),
                      std::move(R1), std::move(r0), std::move(r1));
    }();
    return f;
}

const Family* find_family(const std::string& name) {
    if (name == "twist") return &twist_family();
    if (name == "j3") return &j3_family();
    return nullptr;
}

LaurentPoly riley_poly(const Family& f, int n) { return f.riley(n); }
BivarPoly char_poly(const Family& f, int n) { return f.char_poly(n); }
UniPoly diagonal_poly(const Family& f, int n) { return f.char_poly(n).diagonal(); }
UniPoly reducible_slice(const Family& f, int n) { return f.char_poly(n).parabolic_slice(); }

NonIntegralTrace nonintegral_trace(int n) {
    if (n == 0) throw error("nonintegral_trace is undefined at n = 0");
    Rat v(Int(2L * n - 1), Int(static_cast<long>(n)));
    v.canonicalize();
    return {v, v.get_den() == 1};
}

Mat2<UniPoly> j3_parabolic_power(int n) {
    // rho(a), rho(b) at m = 1; entries in Z[q]
    UniPoly one = UniPoly::constant(1), zero;
    UniPoly q = UniPoly::x();
    Mat2<UniPoly> a{one, one, zero, one};
    Mat2<UniPoly> b{one, zero, -q, one};
    Mat2<UniPoly> w = eval_word(j3_family().word(), a, b);
    return matrix_power_recursive(w, n);
}

EntryIdentityVerdict entry_identities_j3(int n) {
    Mat2<UniPoly> wn = j3_parabolic_power(n);
    UniPoly q = UniPoly::x();
    UniPoly one = UniPoly::constant(1);
    UniPoly printed = wn.e12 + q * wn.e21;
    UniPoly swapped = wn.e21 + q * wn.e12;
    UniPoly rel = (one + q) * wn.e11 + q * (UniPoly::constant(3) + q) * wn.e12 - (one + q) * wn.e22;
    return {printed.is_zero(), swapped.is_zero(), rel.is_zero()};
}

UniPoly alexander_j3(int n) {
    if (n >= 0) throw error("alexander_j3 is defined only for n < 0");
    int d = -2 * n;
    std::vector<Int> c(static_cast<std::size_t>(d) + 1);
    c[0] = 2;
    c[static_cast<std::size_t>(d)] = 2;
    for (int i = 1; i < d; ++i) c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 3 : -3;
    return UniPoly(std::move(c));
}

}  // namespace knotcv
