#include "knotcv/criterion.hpp"

namespace knotcv {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        case TriState::Unknown: return "unknown";
    }
    return "unknown";
}

bool family_is_hyperbolic(const Family& f, int n, std::string* reason) {
    if (f.name() == "twist") {
        if (n == 0) {
            if (reason) *reason = "K_0 is the unknot";
            return false;
        }
        if (n == 1) {
            if (reason) *reason = "K_2 is the trefoil";
            return false;
        }
        if (reason) *reason = "all twist knots other than the unknot and trefoil are hyperbolic";
        return true;
    }
    if (f.name() == "j3") {
        if (n == 0) {
            if (reason) *reason = "J(3,0) is the unknot";
            return false;
        }
        if (reason) *reason = "J(3,2n) is neither a satellite nor a torus knot for n != 0";
        return true;
    }
    if (reason) *reason = "unknown family";
    return false;
}

TriState family_is_fibered(const Family& f, int n, std::string* reason) {
    if (f.name() == "twist") {
        if (n == 0 || n == 1 || n == -1) {
            if (reason)
                *reason = n == 0   ? "the unknot is fibered"
                          : n == 1 ? "the trefoil is fibered"
                                   : "the figure-eight knot is fibered";
            return TriState::Yes;
        }
        if (reason) *reason = "the only fibered twist knots are the unknot, trefoil and figure-eight";
        return TriState::No;
    }
    if (f.name() == "j3") {
        if (n >= 0) {
            if (reason) *reason = "J(3,2n) is a band-connected sum of Hopf links for n >= 0";
            return TriState::Yes;
        }
        if (reason) *reason = "the Alexander polynomial of J(3,2n) is non-monic for n < 0";
        return TriState::No;
    }
    if (reason) *reason = "unknown family";
    return TriState::Unknown;
}

namespace {

GenericityReport make_genericity(const Family& f, int slice_degree) {
    GenericityReport r;
    r.trace_field_degree = slice_degree;
    r.cusp_equals_trace_assumed = true;
    if (f.name() == "twist")
        r.justification = "cusp field equals trace field for twist knots (Neumann-Reid)";
    else if (f.name() == "j3")
        r.justification = "cusp field equals trace field for J(3,2n) via the longitude relation";
    else
        r.justification = "cusp field = trace field not established for this family";
    r.generic = r.trace_field_degree > 2;
    return r;
}

}  // namespace

GenericityReport genericity_report(const Family& f, int n, int prime_count) {
    UniPoly slice = reducible_slice(f, n);
    if (slice.degree() < 1) throw error("parabolic slice is constant; no field degree to report");
    auto verdict = is_irreducible_Z(slice, prime_count);
    if (!verdict.irreducible())
        throw error("parabolic slice is reducible; field degree not determined by this method");
    return make_genericity(f, slice.degree());
}

CommensurabilityReport check_commensurability(const Family& f, int n, int prime_count) {
    CommensurabilityReport rep;
    rep.family = f.name();
    rep.n = n;
    rep.hyperbolic = family_is_hyperbolic(f, n, &rep.hyperbolic_reason);
    rep.fibered = family_is_fibered(f, n, &rep.fibered_reason);

    if (!rep.hyperbolic) rep.inapplicable_reasons.push_back("not hyperbolic: " + rep.hyperbolic_reason);
    if (rep.fibered == TriState::Yes)
        rep.inapplicable_reasons.push_back("fibered: " + rep.fibered_reason);
    if (rep.fibered == TriState::Unknown)
        rep.inapplicable_reasons.push_back("fiberedness unknown");

    BivarPoly rn = char_poly(f, n);
    rep.diagonal = rn.diagonal();
    UniPoly slice = rn.parabolic_slice();
    if (auto d = rn.total_degree()) rep.degree_total = *d;
    if (!slice.is_zero()) rep.degree_slice = slice.degree();
    rep.degrees_equal = rep.degree_total && rep.degree_slice && *rep.degree_total == *rep.degree_slice;
    rep.diagonal_monic = !rep.diagonal.is_zero() && rep.diagonal.degree() >= 0 &&
                         rep.diagonal.leading() == 1;

    if (!rep.inapplicable_reasons.empty()) {
        rep.conclusion = CommensurabilityReport::Conclusion::CriterionInapplicable;
        return rep;
    }

    bool hypotheses = true;
    if (!rep.degrees_equal) {
        hypotheses = false;
        rep.inapplicable_reasons.push_back("total degree differs from slice degree");
    }
    if (rep.diagonal_monic) {
        hypotheses = false;
        rep.inapplicable_reasons.push_back("diagonal polynomial r_n(x,x) is monic");
    }
    if (slice.degree() >= 1) {
        rep.slice_verdict = is_irreducible_Z(slice, prime_count);
        if (!rep.slice_verdict->irreducible()) {
            hypotheses = false;
            rep.inapplicable_reasons.push_back("parabolic slice is Z-reducible");
        }
    } else {
        hypotheses = false;
        rep.inapplicable_reasons.push_back("parabolic slice is constant");
    }
    if (hypotheses && rep.slice_verdict && rep.slice_verdict->irreducible()) {
        rep.genericity = make_genericity(f, slice.degree());
        if (!rep.genericity->generic) {
            hypotheses = false;
            rep.inapplicable_reasons.push_back("not generic: trace field degree <= 2");
        }
    }
    rep.conclusion = hypotheses ? CommensurabilityReport::Conclusion::NotCommensurableToFibered
                                : CommensurabilityReport::Conclusion::CriterionInapplicable;
    return rep;
}

bool diagonal_closed_form_check(int lo, int hi) {
    const Family& f = twist_family();
    for (int n = lo; n <= hi; ++n) {
        UniPoly expected(std::vector<Int>{Int(-(2L * n - 1)), Int(static_cast<long>(n))});
        if (!(diagonal_poly(f, n) == expected)) return false;
    }
    return true;
}

}  // namespace knotcv
