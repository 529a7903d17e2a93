#pragma once

#include <utility>
#include <vector>

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/rational.hpp"
#include "modcurve/arith/ring.hpp"

namespace modcurve {

template <class F>
struct SquarefreePart {
    Poly<F> factor;  // monic, squarefree
    long multiplicity = 1;
};

template <class F>
struct SquarefreeDecomposition {
    F unit;  // p = unit * prod factor_i ^ mult_i
    std::vector<SquarefreePart<F>> parts;
};

namespace detail {

// Rational roots of a nonzero polynomial over Q, via the rational root
// theorem on the cleared-denominator form.  Roots of the form 0 come first,
// then candidates p/q with p | a_0, q | lc, ordered by ascending |p|, |q|,
// positive before negative.
inline std::vector<Rat> rational_roots(Poly<Rat> p) {
    std::vector<Rat> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    while (sgn(p.coeff(0)) == 0) {
        roots.push_back(Rat(0));
        std::vector<Rat> v;
        for (long i = 1; i <= p.degree(); ++i) v.push_back(p.coeff(i));
        p = Poly<Rat>(std::move(v));
        if (p.is_zero()) return roots;
    }
    if (p.degree() == 0) return roots;
    Poly<Int> ip = to_integer_poly(p);
    Int a0 = abs(ip.coeff(0)), an = abs(ip.lc());
    // Divisor enumeration is only worthwhile for moderate coefficients.
    if (a0 > 1000000000 || an > 1000000000) return roots;
    auto divisors = [](const Int& n) {
        std::vector<Int> ds;
        for (Int d(1); d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(n / d);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    for (const Int& num : divisors(a0)) {
        for (const Int& den : divisors(an)) {
            if (gcd(num, den) != 1) continue;
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                if (p.eval(cand) == 0) roots.push_back(cand);
            }
        }
    }
    return roots;
}

template <class F>
inline std::vector<Poly<F>> split_rational_roots(const Poly<F>& f) {
    return {f};  // no splitting over a proper extension field
}

// Over Q, peel off linear factors at rational roots of a squarefree factor,
// so repeated geometric components are reported individually.
template <>
inline std::vector<Poly<Rat>> split_rational_roots<Rat>(const Poly<Rat>& f) {
    std::vector<Poly<Rat>> out;
    Poly<Rat> rest = f;
    for (const Rat& r : rational_roots(f)) {
        Poly<Rat> lin(std::vector<Rat>{-r, Rat(1)});
        auto [q, rem] = poly_divmod(rest, lin);
        if (!rem.is_zero()) throw std::logic_error("root does not divide polynomial");
        out.push_back(lin);
        rest = q;
    }
    if (rest.degree() >= 1) out.push_back(rest);
    return out;
}

}  // namespace detail

// Squarefree decomposition over a field of characteristic zero (Yun's
// algorithm), refined by splitting off linear factors at rational roots of
// every component of multiplicity >= 2.  Factors are monic and pairwise
// coprime; the scalar unit satisfies p = unit * prod parts.
template <class F>
SquarefreeDecomposition<F> squarefree_factor(const Poly<F>& p) {
    static_assert(ring_traits<F>::is_field, "squarefree_factor requires a field");
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    SquarefreeDecomposition<F> out;
    out.unit = p.lc();
    if (p.degree() == 0) return out;
    Poly<F> f = monic(p);

    // Yun's algorithm (Yun 1976).
    Poly<F> fp = f.derivative();
    Poly<F> a = gcd_monic(f, fp);
    Poly<F> b = poly_divmod(f, a).first;
    Poly<F> c = poly_divmod(fp, a).first;
    Poly<F> d = c - b.derivative();
    long i = 1;
    while (b.degree() > 0) {
        Poly<F> ai = gcd_monic(b, d);
        if (ai.degree() > 0) out.parts.push_back({ai, i});
        b = poly_divmod(b, ai).first;
        c = poly_divmod(d, ai).first;
        d = c - b.derivative();
        ++i;
    }

    // Refine repeated components at their rational roots.
    std::vector<SquarefreePart<F>> refined;
    for (const auto& part : out.parts) {
        if (part.multiplicity >= 2) {
            for (const Poly<F>& piece : detail::split_rational_roots<F>(part.factor))
                refined.push_back({piece, part.multiplicity});
        } else {
            refined.push_back(part);
        }
    }
    out.parts = std::move(refined);
    return out;
}

}  // namespace modcurve
