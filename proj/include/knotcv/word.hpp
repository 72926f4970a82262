#pragma once

#include "knotcv/mat2.hpp"

#include <string>
#include <vector>

namespace knotcv {

// Letters of the free group on a, b; capitals are inverses.
enum class Letter { a, A, b, B };

Letter letter_inverse(Letter l);
char letter_char(Letter l);

// Freely reduced word over {a, a^-1, b, b^-1}.
struct GroupWord {
    std::vector<Letter> letters;

    bool operator==(const GroupWord&) const = default;
    bool empty() const { return letters.empty(); }
    std::string str() const;
};

GroupWord reduce(std::vector<Letter> letters);
GroupWord inverse(const GroupWord& w);

// Grammar: sequence of items; item = ('a'|'b'|'A'|'B'|'('word')') ['^' int].
// 'A' and 'B' are shorthand for a^-1, b^-1. Whitespace ignored.
GroupWord parse_word(const std::string& text);

// Product of the images of the letters; inverse letters use the adjugate,
// which requires det = 1 in the coefficient domain.
template <class T>
Mat2<T> eval_word(const GroupWord& w, const Mat2<T>& a, const Mat2<T>& b) {
    Mat2<T> acc = identity_like(a);
    bool checked_a = false, checked_b = false;
    for (Letter l : w.letters) {
        switch (l) {
            case Letter::a:
                acc = acc * a;
                break;
            case Letter::b:
                acc = acc * b;
                break;
            case Letter::A:
                if (!checked_a && !ring_is_one(a.det()))
                    throw error("inverse letter requires det(a) = 1");
                checked_a = true;
                acc = acc * a.adjugate();
                break;
            case Letter::B:
                if (!checked_b && !ring_is_one(b.det()))
                    throw error("inverse letter requires det(b) = 1");
                checked_b = true;
                acc = acc * b.adjugate();
                break;
        }
    }
    return acc;
}

}  // namespace knotcv
