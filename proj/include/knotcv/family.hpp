#pragma once

#include "knotcv/bivar.hpp"
#include "knotcv/laurent.hpp"
#include "knotcv/unipoly.hpp"
#include "knotcv/word.hpp"

#include <map>
#include <mutex>
#include <string>

namespace knotcv {

// A knot family is data: the group word w of the presentation
// <a, b | a w^n = w^n b>, the trace polynomials in both coordinate systems,
// and the recursion seeds. The twist family and J(3,2n) are built in;
// further J(m,2n) families only need a word and seeds.
class Family {
public:
    Family(std::string name, GroupWord word, LaurentPoly trace_mq, BivarPoly trace_xz,
           LaurentPoly riley0, LaurentPoly riley1, BivarPoly char0, BivarPoly char1);

    const std::string& name() const { return name_; }
    const GroupWord& word() const { return word_; }
    const LaurentPoly& trace_mq() const { return trace_mq_; }
    const BivarPoly& trace_xz() const { return trace_xz_; }

    // Symbolic matrix images rho(a), rho(b) of the meridians in the (m,q) ring.
    static Mat2<LaurentPoly> meridian_a();
    static Mat2<LaurentPoly> meridian_b();

    LaurentPoly riley(int n) const;
    BivarPoly char_poly(int n) const;

private:
    std::string name_;
    GroupWord word_;
    LaurentPoly trace_mq_;
    BivarPoly trace_xz_;
    LaurentPoly riley_seed0_, riley_seed1_;
    BivarPoly char_seed0_, char_seed1_;

    mutable std::mutex mu_;
    mutable std::map<int, LaurentPoly> riley_cache_;
    mutable std::map<int, BivarPoly> char_cache_;
};

const Family& twist_family();
const Family& j3_family();
// nullptr for unknown names; valid names are "twist" and "j3".
const Family* find_family(const std::string& name);

// R_n(m, q) by the two-term recursion (both directions).
LaurentPoly riley_poly(const Family& f, int n);
// r_n(x, z); (x - z) * r_n is the full character-variety polynomial.
BivarPoly char_poly(const Family& f, int n);
// r_n(x, x) as a univariate polynomial in x.
UniPoly diagonal_poly(const Family& f, int n);
// r_n(2, 2 - q) in q; the parabolic reducible-character slice.
UniPoly reducible_slice(const Family& f, int n);

struct NonIntegralTrace {
    Rat value;     // (2n - 1) / n in lowest terms
    bool integral;
};
NonIntegralTrace nonintegral_trace(int n);  // n != 0

// Entry identities of w^n for J(3,2n) at m = 1, over Z[q]. Both the printed
// orientation of the w12/w21 identity and its index-swapped form are tested.
struct EntryIdentityVerdict {
    bool printed_w12_form;   // w12^n + q*w21^n = 0
    bool swapped_w21_form;   // w21^n + q*w12^n = 0
    bool entry_relation;     // (1+q)w11^n + q(3+q)w12^n - (1+q)w22^n = 0
};
EntryIdentityVerdict entry_identities_j3(int n);

// w^n for J(3,2n) at m = 1, entries in Z[q].
Mat2<UniPoly> j3_parabolic_power(int n);

// Alexander polynomial of J(3,2n) for n < 0, normalized to nonnegative
// powers of t: coefficients 2, -3, 3, ..., -3, 2 of length -2n + 1.
UniPoly alexander_j3(int n);

}  // namespace knotcv
