#include "modcurve/belyi/parse.hpp"

#include <cctype>
#include <cstddef>
#include <string>

#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/ratfunc.hpp"
#include "modcurve/arith/rational.hpp"

namespace modcurve {
namespace {

using RF = RatFunc<QuadExt>;

constexpr long kMaxExponent = 512;

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    RF run() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", 1);
        RF e = expr();
        skip_ws();
        if (!at_end()) throw ParseError(unexpected(peek()), col());
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    long col() const { return static_cast<long>(pos_) + 1; }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    static std::string unexpected(char c) {
        return std::string("unexpected character '") + c + "'";
    }
    static bool starts_base(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'i' ||
               c == 's' || c == '(';
    }

    RF expr() {
        RF acc = term();
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) return acc;
            char op = peek();
            ++pos_;
            RF t = term();
            acc = (op == '+') ? acc + t : acc - t;
        }
    }

    RF term() {
        RF acc = factor();
        for (;;) {
            skip_ws();
            if (at_end()) return acc;
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                RF f = factor();
                acc = (c == '*') ? acc * f : acc / f;
            } else if (starts_base(c)) {
                acc *= factor();  // juxtaposition multiplies: z(z-2)
            } else {
                return acc;
            }
        }
    }

    RF factor() {
        skip_ws();
        if (at_end()) throw ParseError("expected expression", col());
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        RF b = base();
        skip_ws();
        if (at_end() || peek() != '^') return b;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        long ecol = col();
        long e = bounded_integer("exponent", kMaxExponent, ecol);
        return b.pow(neg ? -e : e);
    }

    RF base() {
        skip_ws();
        if (at_end()) throw ParseError("expected expression", col());
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return RF(QuadExt(Rat(digits())));
        if (c == 'z') {
            ++pos_;
            return RF::var();
        }
        if (c == 'i') {
            ++pos_;
            return RF(QuadExt::sqrt_of(-1));
        }
        if (c == 's') return sqrt_literal();
        if (c == '(') {
            ++pos_;
            RF e = expr();
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", col());
            ++pos_;
            return e;
        }
        throw ParseError(unexpected(c), col());
    }

    RF sqrt_literal() {
        long kwcol = col();
        if (s_.compare(pos_, 4, "sqrt") != 0) throw ParseError("unknown symbol", kwcol);
        pos_ += 4;
        skip_ws();
        if (at_end() || peek() != '(') throw ParseError("expected '(' after sqrt", col());
        ++pos_;
        skip_ws();
        long radcol = col();
        bool neg = false;
        if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        long d = bounded_integer("radicand", 1000000000L, radcol);
        skip_ws();
        if (at_end() || peek() != ')') throw ParseError("expected ')'", col());
        ++pos_;
        try {
            return RF(QuadExt::sqrt_of(neg ? -d : d));
        } catch (const std::domain_error& err) {
            throw ParseError(err.what(), radcol);
        }
    }

    // Reads [0-9]+ as an arbitrary-precision integer.
    Int digits() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", col());
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(s_.substr(start, pos_ - start));
    }

    // Reads [0-9]+ constrained to [0, limit]; errors mention `what`.
    long bounded_integer(const std::string& what, long limit, long at) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer " + what, col());
        Int v = digits();
        if (v > limit) throw ParseError(what + " too large", at);
        return static_cast<long>(v.get_si());
    }
};

}  // namespace

RatMap parse_rat_map(const std::string& text) { return RatMap(Parser(text).run()); }

}  // namespace modcurve
