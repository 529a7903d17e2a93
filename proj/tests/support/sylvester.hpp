#pragma once

// Test oracle: resultant via the Sylvester matrix determinant, computed by
// Bareiss fraction-free elimination.  Deliberately independent of the
// subresultant implementation in the library.

#include <stdexcept>
#include <vector>

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve::testsupport {

template <class R>
R bareiss_det(std::vector<std::vector<R>> m) {
    using RT = ring_traits<R>;
    const size_t n = m.size();
    if (n == 0) return RT::one();
    int sign = 1;
    R prev = RT::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (RT::is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && RT::is_zero(m[p][k])) ++p;
            if (p == n) return RT::zero();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = RT::divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = RT::zero();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Sylvester matrix with deg(b) staggered rows of a's coefficients followed by
// deg(a) rows of b's, so that det = lc(a)^deg(b) * prod b(root of a).
template <class R>
R sylvester_resultant(const Poly<R>& a, const Poly<R>& b) {
    using RT = ring_traits<R>;
    long da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) throw std::domain_error("sylvester oracle: zero polynomial");
    if (da == 0 && db == 0) throw std::domain_error("sylvester oracle: two constants");
    if (da == 0) return ring_pow(a.lc(), db);
    if (db == 0) return ring_pow(b.lc(), da);
    size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<R>> m(n, std::vector<R>(n, RT::zero()));
    for (long r = 0; r < db; ++r)
        for (long k = 0; k <= da; ++k) m[r][r + k] = a.coeff(da - k);
    for (long r = 0; r < da; ++r)
        for (long k = 0; k <= db; ++k) m[db + r][r + k] = b.coeff(db - k);
    return bareiss_det(std::move(m));
}

}  // namespace modcurve::testsupport
