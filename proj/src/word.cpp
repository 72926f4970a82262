#include "knotcv/word.hpp"

#include <cctype>

namespace knotcv {

Letter letter_inverse(Letter l) {
    switch (l) {
        case Letter::a: return Letter::A;
        case Letter::A: return Letter::a;
        case Letter::b: return Letter::B;
        case Letter::B: return Letter::b;
    }
    throw error("bad letter");
}

char letter_char(Letter l) {
    switch (l) {
        case Letter::a: return 'a';
        case Letter::A: return 'A';
        case Letter::b: return 'b';
        case Letter::B: return 'B';
    }
    throw error("bad letter");
}

std::string GroupWord::str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (Letter l : letters) s += letter_char(l);
    return s;
}

GroupWord reduce(std::vector<Letter> letters) {
    std::vector<Letter> out;
    for (Letter l : letters) {
        if (!out.empty() && out.back() == letter_inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupWord{std::move(out)};
}

GroupWord inverse(const GroupWord& w) {
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.push_back(letter_inverse(*it));
    return GroupWord{std::move(out)};
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw error("expected integer exponent in word at position " + std::to_string(i));
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    std::vector<Letter> parse_sequence(bool inner) {
        std::vector<Letter> out;
        while (!done()) {
            char c = peek();
            if (c == ')') {
                if (!inner) throw error("unmatched ')' in word");
                return out;
            }
            std::vector<Letter> unit;
            if (c == '(') {
                ++i;
                unit = parse_sequence(true);
                skip_ws();
                if (i >= s.size() || s[i] != ')') throw error("unmatched '(' in word");
                ++i;
            } else if (c == 'a' || c == 'b' || c == 'A' || c == 'B') {
                ++i;
                switch (c) {
                    case 'a': unit = {Letter::a}; break;
                    case 'b': unit = {Letter::b}; break;
                    case 'A': unit = {Letter::A}; break;
                    case 'B': unit = {Letter::B}; break;
                }
            } else {
                throw error(std::string("unknown symbol '") + c + "' in word");
            }
            long e = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = parse_int();
            }
            if (e < 0) {
                GroupWord inv = inverse(GroupWord{unit});
                unit = inv.letters;
                e = -e;
            }
            for (long k = 0; k < e; ++k) out.insert(out.end(), unit.begin(), unit.end());
        }
        if (inner) throw error("unmatched '(' in word");
        return out;
    }
};

}  // namespace

GroupWord parse_word(const std::string& text) {
    Parser p{text};
    return reduce(p.parse_sequence(false));
}

}  // namespace knotcv
