#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/rational.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

// Sign/magnitude decomposition of a coefficient for printing.
struct CoeffText {
    bool negative = false;
    std::string abs_text;
    bool abs_is_one = false;
};

inline CoeffText coeff_text(const Int& c) {
    CoeffText t;
    t.negative = sgn(c) < 0;
    Int a = abs(c);
    t.abs_text = a.get_str();
    t.abs_is_one = (a == 1);
    return t;
}

inline CoeffText coeff_text(const Rat& c) {
    CoeffText t;
    t.negative = sgn(c) < 0;
    Rat a = abs(c);
    t.abs_text = a.get_str();
    t.abs_is_one = (a == 1);
    return t;
}

inline CoeffText coeff_text(const QuadExt& c) {
    if (c.is_rational()) return coeff_text(c.a());
    CoeffText t;
    if (sgn(c.a()) == 0) {
        QuadExt a = (sgn(c.b()) < 0) ? -c : c;
        t.negative = sgn(c.b()) < 0;
        t.abs_text = a.text();
    } else {
        t.negative = false;
        t.abs_text = "(" + c.text() + ")";
    }
    return t;
}

// Dense univariate polynomial with coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector and degree() == -1.
template <class R>
class Poly {
  public:
    Poly() = default;
    Poly(const R& c0) : c_{c0} { trim(); }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(long deg, const R& coeff) {
        if (deg < 0) throw std::domain_error("monomial degree must be nonnegative");
        std::vector<R> v(static_cast<size_t>(deg) + 1, ring_traits<R>::zero());
        v.back() = coeff;
        return Poly(std::move(v));
    }
    static Poly var() { return monomial(1, ring_traits<R>::one()); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    R coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return ring_traits<R>::zero();
        return c_[static_cast<size_t>(i)];
    }
    const R& lc() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<R>& coeffs() const { return c_; }

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly operator-() const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<R> v(std::max(p.c_.size(), q.c_.size()), ring_traits<R>::zero());
        for (size_t i = 0; i < p.c_.size(); ++i) v[i] = v[i] + p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) v[i] = v[i] + q.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<R> v(p.c_.size() + q.c_.size() - 1, ring_traits<R>::zero());
        for (size_t i = 0; i < p.c_.size(); ++i) {
            if (ring_traits<R>::is_zero(p.c_[i])) continue;
            for (size_t j = 0; j < q.c_.size(); ++j) v[i + j] = v[i + j] + p.c_[i] * q.c_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& p, const R& s) { return p * Poly(s); }
    friend Poly operator*(const R& s, const Poly& p) { return p * Poly(s); }

    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> v;
        v.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * R(static_cast<long>(i)));
        return Poly(std::move(v));
    }

    // Horner evaluation into any ring V constructible from R.
    template <class V>
    V eval(const V& x) const {
        if (c_.empty()) return V(ring_traits<R>::zero());
        V acc(c_.back());
        for (long i = static_cast<long>(c_.size()) - 2; i >= 0; --i)
            acc = acc * x + V(c_[static_cast<size_t>(i)]);
        return acc;
    }

    Poly compose(const Poly& inner) const { return eval<Poly>(inner); }

    // Multiply every coefficient by z^k.
    Poly shifted(long k) const {
        if (is_zero()) return Poly();
        if (k < 0) throw std::domain_error("negative shift");
        std::vector<R> v(static_cast<size_t>(k), ring_traits<R>::zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    Poly divexact_scalar(const R& s) const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(ring_traits<R>::divexact(a, s));
        return Poly(std::move(v));
    }

    std::string text(const std::string& var) const {
        if (c_.empty()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const R& a = c_[static_cast<size_t>(i)];
            if (ring_traits<R>::is_zero(a)) continue;
            CoeffText t = coeff_text(a);
            if (out.empty()) {
                if (t.negative) out += "-";
            } else {
                out += t.negative ? "-" : "+";
            }
            if (i == 0) {
                out += t.abs_text;
            } else {
                if (!t.abs_is_one) out += t.abs_text + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && ring_traits<R>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

// Quotient and remainder over a field.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    static_assert(ring_traits<F>::is_field, "poly_divmod requires field coefficients");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> rem(a.coeffs());
    std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, ring_traits<F>::zero());
    const F inv_lc = ring_traits<F>::divexact(ring_traits<F>::one(), b.lc());
    for (long i = a.degree(); i >= b.degree(); --i) {
        F q = rem[static_cast<size_t>(i)] * inv_lc;
        if (ring_traits<F>::is_zero(q)) continue;
        quo[static_cast<size_t>(i - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(i - b.degree() + j)] =
                rem[static_cast<size_t>(i - b.degree() + j)] - q * b.coeff(j);
    }
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p.divexact_scalar(p.lc());
}

// Monic gcd over a field (Euclid); gcd(0, 0) = 0.
template <class F>
Poly<F> gcd_monic(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Exact polynomial division over any integral domain; throws std::logic_error
// if the division turns out inexact (callers use it only when exactness is
// guaranteed).
template <class R>
Poly<R> poly_divexact(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Poly<R>();
    if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
    Poly<R> rem = a;
    std::vector<R> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, ring_traits<R>::zero());
    while (!rem.is_zero()) {
        long d = rem.degree() - b.degree();
        if (d < 0) throw std::logic_error("inexact polynomial division");
        R q = ring_traits<R>::divexact(rem.lc(), b.lc());
        quo[static_cast<size_t>(d)] = q;
        rem = rem - Poly<R>::monomial(d, q) * b;
    }
    return Poly<R>(std::move(quo));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    long da = a.degree(), db = b.degree();
    if (da < db) return a;
    Poly<R> rem = a;
    const R& lb = b.lc();
    for (long i = da; i >= db; --i) {
        if (rem.is_zero() || rem.degree() < i) {
            rem = rem * lb;
            continue;
        }
        R top = rem.coeff(i);
        rem = rem * lb - Poly<R>::monomial(i - db, top) * b;
    }
    return rem;
}

inline Int poly_content(const Poly<Int>& p) {
    Int g(0);
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

// Least common multiple of coefficient denominators.
inline Int denominator_lcm(const Poly<Rat>& p) {
    Int l(1);
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    return l;
}

inline Poly<Int> to_integer_poly(const Poly<Rat>& p, Int* scale_out = nullptr) {
    Int l = denominator_lcm(p);
    std::vector<Int> v;
    v.reserve(static_cast<size_t>(p.degree() + 1));
    for (long i = 0; i <= p.degree(); ++i) {
        Rat c = p.coeff(i) * Rat(l);
        v.push_back(c.get_num());
    }
    if (scale_out) *scale_out = l;
    return Poly<Int>(std::move(v));
}

template <class R>
struct ring_traits<Poly<R>> {
    static constexpr bool is_field = false;
    static Poly<R> zero() { return Poly<R>(); }
    static Poly<R> one() { return Poly<R>(ring_traits<R>::one()); }
    static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
    static Poly<R> divexact(const Poly<R>& a, const Poly<R>& b) { return poly_divexact(a, b); }
};

}  // namespace modcurve
