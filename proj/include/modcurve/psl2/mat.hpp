#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modcurve/arith/rational.hpp"

namespace modcurve {

// 2x2 integer matrix [[a, b], [c, d]].
struct Mat {
    Int a, b, c, d;

    Mat() : a(1), b(0), c(0), d(1) {}
    Mat(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    Mat(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {}

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator*(const Mat& x, const Mat& y) {
        return Mat(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                   x.c * y.b + x.d * y.d);
    }
    Mat operator-() const { return Mat(-a, -b, -c, -d); }

    Int det() const { return a * d - b * c; }
    Mat adjugate() const { return Mat(d, -b, -c, a); }
    Mat transpose() const { return Mat(a, c, b, d); }

    // Inverse of a determinant-one matrix.
    Mat inverse() const {
        if (det() != 1) throw std::domain_error("inverse requires determinant 1");
        return adjugate();
    }

    Mat pow(long e) const {
        Mat base = e < 0 ? inverse() : *this;
        long k = e < 0 ? -e : e;
        Mat acc;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    std::string text() const {
        return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
               d.get_str() + "]]";
    }
};

inline Mat mat_S() { return Mat(0, -1, 1, 0); }
inline Mat mat_T() { return Mat(1, 1, 0, 1); }
inline Mat mat_A() { return Mat(1, 2, 0, 1); }    // T^2
inline Mat mat_B() { return Mat(1, 0, -2, 1); }   // S T^2 S^-1

// Canonical representative of +-M: negate so that c > 0, or c = 0 and a > 0.
inline Mat psl2_canonical(const Mat& m) {
    if (sgn(m.c) < 0 || (sgn(m.c) == 0 && sgn(m.a) < 0)) return -m;
    return m;
}

// Element of PSL2(Z): a determinant-one integer matrix up to sign, stored by
// its canonical representative.
class PSL2 {
  public:
    PSL2() : m_() {}
    explicit PSL2(const Mat& m) : m_(psl2_canonical(m)) {
        if (m.det() != 1) throw std::domain_error("PSL2 element requires determinant 1");
    }

    const Mat& rep() const { return m_; }

    friend bool operator==(const PSL2& x, const PSL2& y) { return x.m_ == y.m_; }
    friend bool operator!=(const PSL2& x, const PSL2& y) { return !(x == y); }

    friend PSL2 operator*(const PSL2& x, const PSL2& y) { return PSL2(x.m_ * y.m_); }
    PSL2 inverse() const { return PSL2(m_.adjugate()); }
    PSL2 pow(long e) const { return PSL2(m_.pow(e)); }

    bool is_identity() const { return m_ == Mat(); }
    std::string text() const { return m_.text(); }

    static PSL2 S() { return PSL2(mat_S()); }
    static PSL2 T() { return PSL2(mat_T()); }

  private:
    Mat m_;
};

// Letters of group words: S, T and the standard generators of the principal
// congruence group of level two, A = T^2 and B = S T^2 S^-1.
enum class Letter { S, T, A, B };

struct WordTerm {
    Letter g;
    long e;
};
using Word = std::vector<WordTerm>;

inline Mat letter_mat(Letter g) {
    switch (g) {
        case Letter::S: return mat_S();
        case Letter::T: return mat_T();
        case Letter::A: return mat_A();
        case Letter::B: return mat_B();
    }
    throw std::logic_error("unknown letter");
}

inline Mat word_eval_mat(const Word& w) {
    Mat acc;
    for (const auto& t : w) acc = acc * letter_mat(t.g).pow(t.e);
    return acc;
}

inline PSL2 word_eval(const Word& w) { return PSL2(word_eval_mat(w)); }

inline std::string word_text(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& t : w) {
        switch (t.g) {
            case Letter::S: out += "S"; break;
            case Letter::T: out += "T"; break;
            case Letter::A: out += "A"; break;
            case Letter::B: out += "B"; break;
        }
        if (t.e != 1) out += "^" + std::to_string(t.e);
    }
    return out;
}

// Collapse adjacent equal letters and drop zero exponents.
inline Word word_reduce(const Word& w) {
    Word out;
    for (const auto& t : w) {
        if (t.e == 0) continue;
        if (!out.empty() && out.back().g == t.g) {
            out.back().e += t.e;
            if (out.back().e == 0) out.pop_back();
        } else {
            out.push_back(t);
        }
    }
    return out;
}

// Parse words like "T^3", "ST^2S^-1", "(TS)T^4(TS)^-1", "A^2B^-1".
Word parse_word(const std::string& s);

// Parse "[[a,b],[c,d]]".
Mat parse_mat(const std::string& s);

}  // namespace modcurve
