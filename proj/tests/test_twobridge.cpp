#include "knotcv/twobridge.hpp"

#include <doctest.h>

#include <random>

using namespace knotcv;

TEST_CASE("continued fraction convention pinned by the worked n=1 case") {
    CHECK(continued_fraction_value({1, -2, -2}) == Fraction{3, 5});
    CHECK(continued_fraction_value({2, -2}) == Fraction{2, 5});
    CHECK(continued_fraction_value({7}) == Fraction{1, 7});
    CHECK(continued_fraction_value({-3}) == Fraction{2, 3});  // normalize(1/-3) = (-1 mod 3)/3
}

TEST_CASE("continued fraction error cases") {
    CHECK_THROWS_AS(continued_fraction_value({}), error);
    // [1, 1] = 1/(1 - 1/1) divides by zero
    CHECK_THROWS_AS(continued_fraction_value({1, 1}), error);
    CHECK_THROWS_AS(continued_fraction_value({2, 0}), error);
}

TEST_CASE("normalization") {
    CHECK(Fraction::normalize(-5, -7) == Fraction{5, 7});
    CHECK(Fraction::normalize(9, 7) == Fraction{2, 7});
    CHECK(Fraction::normalize(-3, 7) == Fraction{4, 7});
    CHECK(Fraction::normalize(6, 10) == Fraction{3, 5});
    CHECK(Fraction{3, 5}.str() == "3/5");
    CHECK_THROWS_AS(Fraction::normalize(1, 0), error);
    CHECK_THROWS_AS(Fraction::normalize(14, 7), error);
}

TEST_CASE("Schubert equivalence examples") {
    CHECK(fractions_equivalent({3, 5}, {2, 5}));   // 3*2 = 6 = 1 mod 5
    CHECK(!fractions_equivalent({1, 3}, {2, 3}));  // the two trefoil chiralities
    CHECK(fractions_equivalent({3, 5}, {3, 5}));
    CHECK(!fractions_equivalent({1, 3}, {1, 5}));
}

TEST_CASE("Schubert equivalence is an equivalence relation") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> qd(3, 199), pd(1, 500);
    std::vector<Fraction> pool;
    for (int i = 0; i < 60; ++i) {
        long long q = qd(rng) * 2 + 1, p = pd(rng);
        if (std::gcd(p % q, q) != 1 || p % q == 0) continue;
        pool.push_back(Fraction::normalize(p, q));
    }
    for (const auto& f : pool) CHECK(fractions_equivalent(f, f));
    for (const auto& f : pool)
        for (const auto& g : pool) CHECK(fractions_equivalent(f, g) == fractions_equivalent(g, f));
    for (const auto& f : pool)
        for (const auto& g : pool)
            for (const auto& h : pool)
                if (fractions_equivalent(f, g) && fractions_equivalent(g, h))
                    CHECK(fractions_equivalent(f, h));
}

TEST_CASE("j3 closed-form fractions") {
    auto [a1, b1] = j3_fraction(1);
    CHECK(a1 == Fraction{3, 5});
    CHECK(b1 == Fraction{2, 5});
    auto [a2, b2] = j3_fraction(2);
    CHECK(a2 == Fraction{7, 11});
    CHECK(b2 == Fraction{8, 11});
    auto [am1, bm1] = j3_fraction(-1);
    CHECK(am1 == Fraction{5, 7});  // the 5_2 knot
    CHECK_THROWS_AS(j3_fraction(0), error);
}

TEST_CASE("closed forms match their continued fractions over the published range") {
    for (int n = -30; n <= 30; ++n) {
        if (n == 0) continue;
        auto [f1, f2] = j3_fraction(n);  // j3_fraction cross-checks internally
        CHECK(continued_fraction_value({1, -2, -2LL * n}) == f1);
        CHECK(fractions_equivalent(f1, f2));
        CHECK(f1.q == std::abs(6LL * n - 1));
    }
}
