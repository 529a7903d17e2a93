#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/ratfunc.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

// Laurent polynomial over a field F: coeffs[k] multiplies z^(low + k), with
// nonzero first and last coefficients (the zero element has empty coeffs).
template <class F>
class Laurent {
  public:
    Laurent() : low_(0) {}
    Laurent(long low, std::vector<F> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }
    Laurent(const Poly<F>& p) : low_(0), c_(p.coeffs()) { trim(); }

    static Laurent monomial(long e, const F& c) { return Laurent(e, {c}); }

    bool is_zero() const { return c_.empty(); }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }

    F coeff(long e) const {
        long k = e - low_;
        if (k < 0 || k >= static_cast<long>(c_.size())) return ring_traits<F>::zero();
        return c_[static_cast<size_t>(k)];
    }

    friend bool operator==(const Laurent& p, const Laurent& q) {
        return p.low_ == q.low_ && p.c_ == q.c_;
    }
    friend bool operator!=(const Laurent& p, const Laurent& q) { return !(p == q); }

    Laurent operator-() const {
        std::vector<F> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return Laurent(low_, std::move(v));
    }
    friend Laurent operator+(const Laurent& p, const Laurent& q) {
        if (p.is_zero()) return q;
        if (q.is_zero()) return p;
        long lo = std::min(p.low_, q.low_);
        long hi = std::max(p.high(), q.high());
        std::vector<F> v(static_cast<size_t>(hi - lo + 1), ring_traits<F>::zero());
        for (long e = p.low_; e <= p.high(); ++e) v[e - lo] = v[e - lo] + p.coeff(e);
        for (long e = q.low_; e <= q.high(); ++e) v[e - lo] = v[e - lo] + q.coeff(e);
        return Laurent(lo, std::move(v));
    }
    friend Laurent operator-(const Laurent& p, const Laurent& q) { return p + (-q); }
    friend Laurent operator*(const Laurent& p, const Laurent& q) {
        if (p.is_zero() || q.is_zero()) return Laurent();
        std::vector<F> v(p.c_.size() + q.c_.size() - 1, ring_traits<F>::zero());
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) v[i + j] = v[i + j] + p.c_[i] * q.c_[j];
        return Laurent(p.low_ + q.low_, std::move(v));
    }

    // A rational function whose denominator is a monomial c*z^k is a Laurent
    // polynomial; anything else is rejected.
    static Laurent from_ratfunc(const RatFunc<F>& f) {
        const Poly<F>& den = f.den();
        long k = den.degree();
        for (long i = 0; i < k; ++i) {
            if (!ring_traits<F>::is_zero(den.coeff(i)))
                throw std::domain_error("not a Laurent polynomial: denominator is not a monomial");
        }
        F c = den.lc();
        std::vector<F> v;
        for (long i = 0; i <= f.num().degree(); ++i)
            v.push_back(ring_traits<F>::divexact(f.num().coeff(i), c));
        return Laurent(-k, std::move(v));
    }

    // Palindromic means coeff(e) == coeff(-e) for all e.
    bool palindromic() const {
        for (long e = low_; e <= high(); ++e) {
            if (!(coeff(e) == coeff(-e))) return false;
        }
        return true;
    }

    // For palindromic input, the unique polynomial p with
    // p(z + 1/z) = this, computed against the Chebyshev-like basis
    // C_0 = 2, C_1 = y, C_{e+1} = y*C_e - C_{e-1}, where C_e stands for
    // z^e + z^-e.
    Poly<F> palindromic_reduce() const {
        if (!palindromic()) throw std::domain_error("not palindromic");
        if (is_zero()) return Poly<F>();
        long n = high();
        // c_basis[e] = polynomial in y representing z^e + z^-e.
        std::vector<Poly<F>> c_basis;
        c_basis.push_back(Poly<F>(F(2)));
        if (n >= 1) c_basis.push_back(Poly<F>::var());
        for (long e = 2; e <= n; ++e)
            c_basis.push_back(Poly<F>::var() * c_basis[e - 1] - c_basis[e - 2]);
        Poly<F> out(coeff(0));
        for (long e = 1; e <= n; ++e) out += c_basis[static_cast<size_t>(e)] * coeff(e);
        return out;
    }

    // Substitute y = z + 1/z into a polynomial in y; inverse of the above.
    static Laurent substitute_symmetric(const Poly<F>& p) {
        Laurent y = Laurent(-1, {ring_traits<F>::one(), ring_traits<F>::zero(),
                                 ring_traits<F>::one()});
        Laurent acc;
        for (long i = p.degree(); i >= 0; --i) {
            acc = acc * y + Laurent(0, {p.coeff(i)});
        }
        return acc;
    }

  private:
    void trim() {
        size_t drop = 0;
        while (drop < c_.size() && ring_traits<F>::is_zero(c_[drop])) ++drop;
        if (drop > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
            low_ += static_cast<long>(drop);
        }
        while (!c_.empty() && ring_traits<F>::is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) low_ = 0;
    }

    long low_;
    std::vector<F> c_;
};

}  // namespace modcurve
