#pragma once

#include "knotcv/factorint.hpp"
#include "knotcv/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotcv {

enum class TriState { Yes, No, Unknown };
std::string to_string(TriState t);

// Trace-field degree read off the irreducible parabolic slice, with the
// per-family cusp-field = trace-field justification. Generic means the
// degree exceeds 2, so the cusp coefficient avoids Q(i) and Q(sqrt(-3)).
struct GenericityReport {
    int trace_field_degree;
    bool cusp_equals_trace_assumed;
    std::string justification;
    bool generic;
};
// Requires the slice to be irreducible (else the field degree is not
// determined by this method); throws otherwise.
GenericityReport genericity_report(const Family& f, int n, int prime_count = 8);

struct CommensurabilityReport {
    enum class Conclusion { NotCommensurableToFibered, CriterionInapplicable };

    std::string family;
    int n = 0;
    bool hyperbolic = false;
    std::string hyperbolic_reason;
    TriState fibered = TriState::Unknown;
    std::string fibered_reason;

    std::optional<int> degree_total;   // total degree of r_n(x,z)
    std::optional<int> degree_slice;   // degree of r_n(2,2-q)
    bool degrees_equal = false;
    UniPoly diagonal;                  // r_n(x,x)
    bool diagonal_monic = false;
    std::optional<IrreducibilityVerdict> slice_verdict;
    std::optional<GenericityReport> genericity;

    Conclusion conclusion = Conclusion::CriterionInapplicable;
    std::vector<std::string> inapplicable_reasons;
};

// Decision procedure: degree equality, non-monic diagonal, Z-irreducible
// slice, genericity; applicable only to hyperbolic non-fibered indices.
// Inapplicability is a report outcome, never an error.
CommensurabilityReport check_commensurability(const Family& f, int n, int prime_count = 8);

// Exact check of r_n(x,x) = n*x - (2n - 1) for the twist family over a range.
bool diagonal_closed_form_check(int lo, int hi);

// Paper-fact tables (classification inputs, not recomputed).
bool family_is_hyperbolic(const Family& f, int n, std::string* reason = nullptr);
TriState family_is_fibered(const Family& f, int n, std::string* reason = nullptr);

}  // namespace knotcv
