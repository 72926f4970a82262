#include "knotcv/criterion.hpp"

#include <doctest.h>

using namespace knotcv;
using Conclusion = CommensurabilityReport::Conclusion;

TEST_CASE("classification tables") {
    std::string why;
    CHECK(!family_is_hyperbolic(twist_family(), 0, &why));
    CHECK(!family_is_hyperbolic(twist_family(), 1));
    CHECK(family_is_hyperbolic(twist_family(), -1));
    CHECK(family_is_hyperbolic(twist_family(), 2));
    CHECK(!family_is_hyperbolic(j3_family(), 0));
    CHECK(family_is_hyperbolic(j3_family(), -1));
    CHECK(family_is_hyperbolic(j3_family(), 3));

    CHECK(family_is_fibered(twist_family(), 0) == TriState::Yes);
    CHECK(family_is_fibered(twist_family(), 1) == TriState::Yes);
    CHECK(family_is_fibered(twist_family(), -1) == TriState::Yes);
    CHECK(family_is_fibered(twist_family(), 2) == TriState::No);
    CHECK(family_is_fibered(twist_family(), -2) == TriState::No);
    CHECK(family_is_fibered(j3_family(), 0) == TriState::Yes);
    CHECK(family_is_fibered(j3_family(), 4) == TriState::Yes);
    CHECK(family_is_fibered(j3_family(), -1) == TriState::No);
}

TEST_CASE("twist criterion over the published range") {
    for (int n = -10; n <= 10; ++n) {
        auto rep = check_commensurability(twist_family(), n);
        if (n == 0 || n == 1 || n == -1) {
            CHECK(rep.conclusion == Conclusion::CriterionInapplicable);
            CHECK(!rep.inapplicable_reasons.empty());
        } else {
            CHECK(rep.conclusion == Conclusion::NotCommensurableToFibered);
            CHECK(rep.degrees_equal);
            CHECK(!rep.diagonal_monic);
            REQUIRE(rep.slice_verdict.has_value());
            CHECK(rep.slice_verdict->irreducible());
            REQUIRE(rep.genericity.has_value());
            CHECK(rep.genericity->generic);
        }
    }
}

TEST_CASE("j3 criterion over the published range") {
    for (int n = -12; n <= -1; ++n) {
        auto rep = check_commensurability(j3_family(), n);
        CHECK(rep.conclusion == Conclusion::NotCommensurableToFibered);
        CHECK(rep.degree_total == -3 * n);
        CHECK(rep.degree_slice == -3 * n);
    }
    for (int n = 0; n <= 3; ++n) {
        auto rep = check_commensurability(j3_family(), n);
        CHECK(rep.conclusion == Conclusion::CriterionInapplicable);
        CHECK(rep.fibered == TriState::Yes);
    }
}

TEST_CASE("genericity report carries the trace-field degree") {
    auto g = genericity_report(twist_family(), 2);
    CHECK(g.trace_field_degree == 3);
    CHECK(g.generic);
    CHECK(g.cusp_equals_trace_assumed);

    auto g8 = genericity_report(twist_family(), -1);
    CHECK(g8.trace_field_degree == 2);  // figure-eight: Q(sqrt(-3))
    CHECK(!g8.generic);
}

TEST_CASE("inapplicable outcomes are reports, not errors") {
    auto rep = check_commensurability(twist_family(), 0);
    CHECK(rep.conclusion == Conclusion::CriterionInapplicable);
    // the polynomial data is still populated for inspection
    CHECK(rep.degree_total == 0);
    CHECK(rep.diagonal == UniPoly::constant(1));
}

TEST_CASE("diagonal closed form over a wide window") {
    CHECK(diagonal_closed_form_check(-25, 25));
}
