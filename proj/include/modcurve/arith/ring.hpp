#pragma once

#include <stdexcept>

#include "modcurve/arith/rational.hpp"

namespace modcurve {

// Traits used by the generic polynomial machinery.  A specialization must
// provide zero/one, a zero test, and exact division (which throws
// std::logic_error when the division is not exact -- callers only use it in
// places where exactness is a theorem, so a failure indicates a bug).
template <class R>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static constexpr bool is_field = false;
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& a) { return sgn(a) == 0; }
    static Int divexact(const Int& a, const Int& b) {
        if (is_zero(b)) throw std::domain_error("exact division by zero");
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (sgn(r) != 0) throw std::logic_error("inexact integer division");
        return q;
    }
};

template <>
struct ring_traits<Rat> {
    static constexpr bool is_field = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat divexact(const Rat& a, const Rat& b) {
        if (is_zero(b)) throw std::domain_error("exact division by zero");
        return a / b;
    }
};

// Generic exponentiation by repeated squaring (e >= 0).
template <class R>
R ring_pow(const R& base, long e) {
    if (e < 0) throw std::domain_error("ring_pow: negative exponent");
    R acc = ring_traits<R>::one();
    R sq = base;
    while (e > 0) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e > 0) sq = sq * sq;
    }
    return acc;
}

}  // namespace modcurve
