#include "modcurve/psl2/mat.hpp"

#include <cctype>

namespace modcurve {

namespace {

struct WordParser {
    const std::string& s;
    size_t pos = 0;

    explicit WordParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    long parse_exponent() {
        skip_ws();
        if (pos >= s.size() || s[pos] != '^') return 1;
        ++pos;
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = (s[pos] == '-');
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::domain_error("word syntax: expected integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    Word parse_sequence(bool inner) {
        Word out;
        for (;;) {
            skip_ws();
            if (pos >= s.size()) {
                if (inner) throw std::domain_error("word syntax: missing ')'");
                break;
            }
            char ch = s[pos];
            if (ch == ')') {
                if (!inner) throw std::domain_error("word syntax: unmatched ')'");
                break;
            }
            if (ch == '(') {
                ++pos;
                Word grp = parse_sequence(true);
                if (pos >= s.size() || s[pos] != ')')
                    throw std::domain_error("word syntax: missing ')'");
                ++pos;
                long e = parse_exponent();
                append_group(out, grp, e);
                continue;
            }
            Letter g;
            switch (ch) {
                case 'S': g = Letter::S; break;
                case 'T': g = Letter::T; break;
                case 'A': g = Letter::A; break;
                case 'B': g = Letter::B; break;
                case '1':
                    ++pos;
                    continue;  // identity placeholder
                default:
                    throw std::domain_error(std::string("word syntax: unexpected character '") +
                                            ch + "'");
            }
            ++pos;
            long e = parse_exponent();
            out.push_back({g, e});
        }
        return out;
    }

    static void append_group(Word& out, const Word& grp, long e) {
        if (e >= 0) {
            for (long k = 0; k < e; ++k)
                for (const auto& t : grp) out.push_back(t);
        } else {
            for (long k = 0; k < -e; ++k)
                for (auto it = grp.rbegin(); it != grp.rend(); ++it)
                    out.push_back({it->g, -it->e});
        }
    }
};

}  // namespace

Word parse_word(const std::string& s) {
    WordParser p(s);
    Word w = p.parse_sequence(false);
    return word_reduce(w);
}

namespace {

Int parse_int_at(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::domain_error("matrix syntax: expected integer");
    return Int(s.substr(start, pos - start));
}

void expect_char(const std::string& s, size_t& pos, char c) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size() || s[pos] != c)
        throw std::domain_error(std::string("matrix syntax: expected '") + c + "'");
    ++pos;
}

}  // namespace

Mat parse_mat(const std::string& s) {
    size_t pos = 0;
    expect_char(s, pos, '[');
    expect_char(s, pos, '[');
    Int a = parse_int_at(s, pos);
    expect_char(s, pos, ',');
    Int b = parse_int_at(s, pos);
    expect_char(s, pos, ']');
    expect_char(s, pos, ',');
    expect_char(s, pos, '[');
    Int c = parse_int_at(s, pos);
    expect_char(s, pos, ',');
    Int d = parse_int_at(s, pos);
    expect_char(s, pos, ']');
    expect_char(s, pos, ']');
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::domain_error("matrix syntax: trailing characters");
    return Mat(a, b, c, d);
}

}  // namespace modcurve
