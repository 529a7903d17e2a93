#pragma once

#include <stdexcept>
#include <string>

#include "modcurve/arith/rational.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

// Element a + b*sqrt(d) of a real or imaginary quadratic extension of the
// rationals.  d is a squarefree integer != 0, 1.  Plain rationals carry the
// marker d = 0 (with b = 0); they combine freely with elements of any single
// quadratic field, but elements of two different fields may not be mixed.
class QuadExt {
  public:
    QuadExt() : d_(0), a_(0), b_(0) {}
    QuadExt(const Rat& a) : d_(0), a_(a), b_(0) {}
    QuadExt(const Int& a) : d_(0), a_(a), b_(0) {}
    QuadExt(long a) : d_(0), a_(a), b_(0) {}
    QuadExt(int a) : d_(0), a_(a), b_(0) {}

    QuadExt(long d, const Rat& a, const Rat& b) : d_(d), a_(a), b_(b) {
        if (sgn(b_) == 0) {
            d_ = 0;
        } else {
            validate_radicand(d_);
        }
    }

    static QuadExt sqrt_of(long d) { return QuadExt(d, Rat(0), Rat(1)); }

    long d() const { return d_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool is_rational() const { return d_ == 0; }

    QuadExt conj() const { return QuadExt(d_, a_, -b_); }

    // Field norm a^2 - d*b^2 (multiplicative).
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt operator-() const { return QuadExt(d_, -a_, -b_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long d = unify(x, y);
        return QuadExt(d, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        long d = unify(x, y);
        return QuadExt(d, x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long d = unify(x, y);
        return QuadExt(d, x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadExt inverse() const {
        Rat n = norm();
        if (sgn(n) == 0) throw std::domain_error("division by zero quadratic element");
        return QuadExt(d_, a_ / n, -b_ / n);
    }

    // Canonical text: rationals print as such; sqrt(-1) prints as i.
    std::string text() const {
        if (is_rational()) return to_string(a_);
        std::string rad = (d_ == -1) ? "i" : ("sqrt(" + std::to_string(d_) + ")");
        std::string bp;
        if (b_ == 1) {
            bp = rad;
        } else if (b_ == -1) {
            bp = "-" + rad;
        } else {
            bp = to_string(b_) + "*" + rad;
        }
        if (sgn(a_) == 0) return bp;
        if (sgn(b_) > 0) return to_string(a_) + "+" + bp;
        return to_string(a_) + bp;  // bp already carries its minus sign
    }

  private:
    static void validate_radicand(long d) {
        if (d == 0 || d == 1) throw std::domain_error("radicand must not be 0 or 1");
        long ad = d < 0 ? -d : d;
        for (long p = 2; p * p <= ad; ++p) {
            if (ad % (p * p) == 0) throw std::domain_error("radicand must be squarefree");
        }
    }

    static long unify(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw std::domain_error("elements of different quadratic fields");
    }

    long d_;
    Rat a_, b_;
};

template <>
struct ring_traits<QuadExt> {
    static constexpr bool is_field = true;
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(1); }
    static bool is_zero(const QuadExt& a) { return a.is_zero(); }
    static QuadExt divexact(const QuadExt& a, const QuadExt& b) { return a / b; }
};

inline std::string to_string(const QuadExt& v) { return v.text(); }

}  // namespace modcurve
