#include "knotcv/unipoly.hpp"

#include <sstream>

namespace knotcv {

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

UniPoly UniPoly::monomial(Int c, int deg) {
    if (c == 0) return {};
    std::vector<Int> v(static_cast<std::size_t>(deg) + 1, Int(0));
    v.back() = std::move(c);
    return UniPoly(std::move(v));
}

const Int& UniPoly::leading() const {
    if (c_.empty()) throw error("zero polynomial has no leading coefficient");
    return c_.back();
}

bool UniPoly::is_monic() const { return leading() == 1; }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Int& k) const {
    if (k == 0) return {};
    UniPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(static_cast<long>(i));
    return UniPoly(std::move(v));
}

Int UniPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) g = int_gcd(g, v);
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (c_.empty()) return {};
    Int g = content();
    UniPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw error("division by zero polynomial");
    if (is_zero()) return UniPoly{};
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
    const Int& lc = divisor.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= divisor.degree(); --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Int q = rem[i] / lc;
        int shift = i - divisor.degree();
        for (int j = 0; j <= divisor.degree(); ++j) rem[j + shift] -= q * divisor.c_[j];
        quot[shift] = std::move(q);
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return UniPoly(std::move(quot));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a mod b.
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
    const Int& lc = b.leading();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        UniPoly t = UniPoly::monomial(a.leading(), shift) * b;
        a = a * lc - t;
    }
    return a;
}

}  // namespace

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * (b.leading() < 0 ? Int(-1) : Int(1));
    if (b.is_zero()) return a.primitive_part() * (a.leading() < 0 ? Int(-1) : Int(1));
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = b.primitive_part();
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) throw error("squarefree part of zero polynomial");
    UniPoly f = primitive_part();
    if (f.leading() < 0) f = -f;
    if (f.degree() <= 1) return f;
    UniPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) return f;
    auto q = f.divide_exact(g);
    if (!q) throw error("internal: gcd does not divide");
    return *q;
}

Int UniPoly::eval_int(const Int& x) const {
    Int acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

bool UniPoly::has_rational_root(const Int& u, const Int& v) const {
    // sum a_i u^i v^(d-i)
    Int acc = 0;
    int d = degree();
    for (int i = d; i >= 0; --i) acc = acc * u + c_[static_cast<std::size_t>(i)] * int_pow(v, static_cast<unsigned long>(d - i));
    return acc == 0;
}

UniPoly UniPoly::compose_scale(const Int& s) const {
    std::vector<Int> v = c_;
    Int p = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        p *= s;
        v[i] *= p;
    }
    return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Int a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i != 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace knotcv
