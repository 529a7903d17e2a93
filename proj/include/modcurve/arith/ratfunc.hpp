#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

// Rational function over a field F, kept in lowest terms with monic
// denominator.  The zero function is 0/1.
template <class F>
class RatFunc {
    static_assert(ring_traits<F>::is_field, "RatFunc requires field coefficients");

  public:
    RatFunc() : num_(), den_(ring_traits<F>::one()) {}
    RatFunc(const F& c) : num_(c), den_(ring_traits<F>::one()) {}
    RatFunc(const Int& c) : num_(F(c)), den_(ring_traits<F>::one()) {}
    RatFunc(long c) : num_(F(c)), den_(ring_traits<F>::one()) {}
    RatFunc(const Poly<F>& p) : num_(p), den_(ring_traits<F>::one()) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc var() { return RatFunc(Poly<F>::var()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Degree as a map P1 -> P1 (for nonzero f): max of numerator and
    // denominator degrees.
    long map_degree() const { return std::max(num_.degree(), den_.degree()); }

    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    RatFunc operator-() const { return RatFunc(-num_, den_, already_normal{}); }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
        if (g.is_zero()) throw std::domain_error("division by the zero function");
        return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
    }
    RatFunc& operator+=(const RatFunc& g) { return *this = *this + g; }
    RatFunc& operator-=(const RatFunc& g) { return *this = *this - g; }
    RatFunc& operator*=(const RatFunc& g) { return *this = *this * g; }
    RatFunc& operator/=(const RatFunc& g) { return *this = *this / g; }

    RatFunc pow(long e) const {
        if (e == 0) return RatFunc(ring_traits<F>::one());
        if (e < 0) return (RatFunc(ring_traits<F>::one()) / *this).pow(-e);
        RatFunc acc(ring_traits<F>::one());
        RatFunc sq = *this;
        long k = e;
        while (k > 0) {
            if (k & 1) acc *= sq;
            k >>= 1;
            if (k > 0) sq *= sq;
        }
        return acc;
    }

    // Composition f(inner); inner must be nonconstant.
    RatFunc compose(const RatFunc& inner) const {
        if (inner.is_constant()) throw std::domain_error("composition with a constant map");
        RatFunc n = num_.template eval<RatFunc>(inner);
        RatFunc d = den_.template eval<RatFunc>(inner);
        return n / d;
    }

    // Finite evaluation; nullopt at poles.
    std::optional<F> eval(const F& x) const {
        F d = den_.eval(x);
        if (ring_traits<F>::is_zero(d)) return std::nullopt;
        return ring_traits<F>::divexact(num_.eval(x), d);
    }

    // Value at infinity as a point of P1: returns {true, .} for infinity,
    // {false, v} for the finite value v.
    std::pair<bool, F> value_at_infinity() const {
        long dn = num_.degree(), dd = den_.degree();
        if (dn > dd) return {true, ring_traits<F>::zero()};
        if (dn < dd) return {false, ring_traits<F>::zero()};
        return {false, ring_traits<F>::divexact(num_.lc(), den_.lc())};
    }

    std::string text(const std::string& var = "z") const {
        if (den_ == Poly<F>(ring_traits<F>::one())) return num_.text(var);
        std::string n = num_.text(var);
        std::string d = den_.text(var);
        return "(" + n + ")/(" + d + ")";
    }

  private:
    struct already_normal {};
    RatFunc(Poly<F> num, Poly<F> den, already_normal)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(ring_traits<F>::one());
            return;
        }
        Poly<F> g = gcd_monic(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g).first;
            den_ = poly_divmod(den_, g).first;
        }
        F l = den_.lc();
        if (!(l == ring_traits<F>::one())) {
            num_ = num_.divexact_scalar(l);
            den_ = den_.divexact_scalar(l);
        }
    }

    Poly<F> num_, den_;
};

template <class F>
struct ring_traits<RatFunc<F>> {
    static constexpr bool is_field = true;
    static RatFunc<F> zero() { return RatFunc<F>(); }
    static RatFunc<F> one() { return RatFunc<F>(ring_traits<F>::one()); }
    static bool is_zero(const RatFunc<F>& f) { return f.is_zero(); }
    static RatFunc<F> divexact(const RatFunc<F>& a, const RatFunc<F>& b) { return a / b; }
};

}  // namespace modcurve
