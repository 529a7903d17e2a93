#pragma once

#include <stdexcept>
#include <utility>

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

// Resultant of two univariate polynomials over an integral domain, by the
// subresultant polynomial remainder sequence (Collins; see Cohen, "A Course
// in Computational Algebraic Number Theory", Alg. 3.3.7).  All interior
// divisions are exact by the subresultant theorem.
//
// Convention: Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots of a,
// so Res_z(z - X, z - Y) = X - Y and Res(a, b) = (-1)^(deg a * deg b) Res(b, a).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    using RT = ring_traits<R>;
    if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) {
        const Poly<R>& other = a.is_zero() ? b : a;
        if (other.degree() == 0) throw std::domain_error("resultant of two constants");
        return RT::zero();
    }
    if (a.degree() == 0 && b.degree() == 0)
        throw std::domain_error("resultant of two constants");
    if (a.degree() == 0) return ring_pow(a.lc(), b.degree());
    if (b.degree() == 0) return ring_pow(b.lc(), a.degree());

    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
        std::swap(a, b);
    }
    R g = RT::one(), h = RT::one();
    while (true) {
        long da = a.degree(), db = b.degree();
        long delta = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        Poly<R> rem = pseudo_rem(a, b);
        if (rem.is_zero()) return RT::zero();  // deg b >= 1 here, so a common factor exists
        Poly<R> next = rem.divexact_scalar(g * ring_pow(h, delta));
        a = std::move(b);
        b = std::move(next);
        g = a.lc();
        if (delta > 0) h = RT::divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
        if (b.degree() == 0) {
            long dfin = a.degree();
            R res = RT::divexact(ring_pow(b.lc(), dfin), ring_pow(h, dfin - 1));
            return sign < 0 ? -res : res;
        }
    }
}

}  // namespace modcurve
