#include "knotcv/twobridge.hpp"

#include <numeric>

namespace knotcv {

Fraction Fraction::normalize(long long p, long long q) {
    if (q == 0) throw error("fraction with zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    p %= q;
    if (p < 0) p += q;
    if (p == 0) throw error("fraction reduces to an integer; not a knot fraction");
    return {p, q};
}

std::string Fraction::str() const {
    return std::to_string(p) + "/" + std::to_string(q);
}

Fraction continued_fraction_value(const std::vector<long long>& entries) {
    if (entries.empty()) throw error("continued fraction needs at least one entry");
    // fold from the innermost level: t = a_k, then t <- a_i - 1/t
    long long num = entries.back(), den = 1;
    for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
        if (num == 0) throw error("zero denominator in continued fraction evaluation");
        long long n2 = *it * num - den;
        den = num;
        num = n2;
    }
    if (num == 0) throw error("zero denominator in continued fraction evaluation");
    return Fraction::normalize(den, num);
}

bool fractions_equivalent(const Fraction& f1, const Fraction& f2) {
    if (f1.q != f2.q) return false;
    long long q = f1.q;
    if (f1.p % q == f2.p % q) return true;
    return (static_cast<long long>(f1.p % q) * (f2.p % q)) % q == 1;
}

std::pair<Fraction, Fraction> j3_fraction(int n) {
    if (n == 0) throw error("J(3,0) is the unknot; no Schubert fraction");
    long long N = n;
    Fraction f1 = Fraction::normalize(4 * N - 1, 6 * N - 1);
    Fraction f2 = Fraction::normalize(6 * N - 4, 6 * N - 1);
    if (!fractions_equivalent(f1, f2))
        throw error("closed-form fractions for n=" + std::to_string(n) + " are not equivalent");
    Fraction cf1 = continued_fraction_value({1, -2, -2 * N});
    if (!(cf1 == f1))
        throw error("[1,-2,-2n] disagrees with (4n-1)/(6n-1) at n=" + std::to_string(n));
    if (n > 0) {
        // 2n entries; the expansion of (6n-4)/(6n-1) under the fixed
        // convention ends in -2 (the all-even continued fraction
        // (6n-1)/(6n-4) = 2 - 1/(2 - ... - 1/(-2)))
        std::vector<long long> entries(static_cast<std::size_t>(2 * n) - 1, 2);
        entries.push_back(-2);
        Fraction cf2 = continued_fraction_value(entries);
        if (!(cf2 == f2))
            throw error("even continued fraction disagrees with (6n-4)/(6n-1) at n=" +
                        std::to_string(n));
    }
    return {f1, f2};
}

}  // namespace knotcv
