#include "modcurve/modeq/modular.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modcurve/arith/laurent.hpp"
#include "modcurve/arith/ratfunc.hpp"
#include "modcurve/arith/resultant.hpp"
#include "modcurve/belyi/catalog.hpp"

namespace modcurve {

namespace {

// z-polynomial scale*N(z) - V*D(z) with integer bivariate coefficients,
// where f = N/D over Q and V is one of the variables X, Y.  Clearing the
// common rational denominator of N and D multiplies the pencil by a
// constant, which the final content normalization removes again.
Poly<BivarPoly> scaled_pencil(const RatFunc<Rat>& f, const Int& scale, const BivarPoly& var) {
    Int lam = lcm(denominator_lcm(f.num()), denominator_lcm(f.den()));
    long d = std::max(f.num().degree(), f.den().degree());
    std::vector<BivarPoly> c(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) {
        Rat nr = f.num().coeff(i) * Rat(lam);
        Rat dr = f.den().coeff(i) * Rat(lam);
        Int ni = nr.get_num();
        Int di = dr.get_num();
        c[static_cast<size_t>(i)] = BivarPoly(scale * ni) - var * BivarPoly(di);
    }
    return Poly<BivarPoly>(std::move(c));
}

ModularPolynomial normalized(BivarPoly res) {
    ModularPolynomial out;
    out.content_removed = res.content();
    BivarPoly prim = res.divexact_scalar(out.content_removed);
    out.sign_flipped = sgn(prim.leading_term().second) < 0;
    if (out.sign_flipped) prim = -prim;
    out.symmetric = prim.symmetric();
    out.leading_one = prim.coeff(prim.degree_x(), 0) == Int(1);
    out.phi = std::move(prim);
    return out;
}

}  // namespace

ModularPolynomial modular_polynomial(const RatMap& f, const RatMap& g, const Int& scale) {
    if (sgn(scale) == 0) throw std::domain_error("scale must be nonzero");
    RatFunc<Rat> rf = rational_func(f);
    RatFunc<Rat> rg = rational_func(g);
    BivarPoly res = resultant(scaled_pencil(rf, scale, BivarPoly::X()),
                              scaled_pencil(rg, scale, BivarPoly::Y()));
    if (res.is_zero())
        throw std::domain_error("degenerate map pair: resultant vanishes identically");
    return normalized(std::move(res));
}

ModularPolynomial modular_polynomial_level(long level) {
    RatMap f = level == 2   ? j_map_gamma0_2()
               : level == 3 ? j_map_gamma0_3()
                            : throw std::domain_error("level must be 2 or 3");
    RatMap g = level == 2 ? scaled_j_map_gamma0_2() : scaled_j_map_gamma0_3();
    ModularPolynomial out = modular_polynomial(f, g, Int(1728));
    out.level = level;
    return out;
}

bool involution_check(const RatMap& f, const RatMap& g, const RatMap& mobius) {
    if (mobius.degree() != 1)
        throw std::domain_error("involution check requires a degree-one map");
    return compose_maps(f, mobius) == g && compose_maps(g, mobius) == f;
}

SymmetricRouteReport symmetric_route_check(const RatMap& f, const RatMap& g,
                                           const Rat& shift) {
    const Int scale(1728);
    RatFunc<Rat> rf = rational_func(f);
    RatFunc<Rat> rg = rational_func(g);
    Poly<Rat> sh(std::vector<Rat>{shift, Rat(1)});
    auto shifted = [&](const RatFunc<Rat>& h) {
        return RatFunc<Rat>(h.num().compose(sh) * Rat(scale), h.den().compose(sh));
    };
    RatFunc<Rat> big_f = shifted(rf);
    RatFunc<Rat> big_g = shifted(rg);

    SymmetricRouteReport rep;
    try {
        Laurent<Rat> lsum = Laurent<Rat>::from_ratfunc(big_f + big_g);
        Laurent<Rat> lprod = Laurent<Rat>::from_ratfunc(big_f * big_g);
        rep.p = lsum.palindromic_reduce();
        rep.q = lprod.palindromic_reduce();
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string("symmetric route precondition failed: ") + e.what());
    }

    Int lam_p, lam_q;
    Poly<Int> ip = to_integer_poly(rep.p, &lam_p);
    Poly<Int> iq = to_integer_poly(rep.q, &lam_q);
    // y-polynomials lam*(p(y) - U) and mu*(q(y) - V) over Z[U, V].  The
    // constant prefactors scale the resultant by lam^deg(q) * mu^deg(p);
    // content normalization removes that again.
    auto pencil = [](const Poly<Int>& a, const Int& lam, const BivarPoly& var) {
        std::vector<BivarPoly> c(static_cast<size_t>(a.degree()) + 1);
        for (long i = 0; i <= a.degree(); ++i) c[static_cast<size_t>(i)] = BivarPoly(a.coeff(i));
        c[0] -= var * BivarPoly(lam);
        return Poly<BivarPoly>(std::move(c));
    };
    BivarPoly res;
    try {
        res = resultant(pencil(ip, lam_p, BivarPoly::X()), pencil(iq, lam_q, BivarPoly::Y()));
    } catch (const std::domain_error& e) {
        throw std::domain_error(std::string("symmetric route precondition failed: ") + e.what());
    }
    if (res.is_zero())
        throw std::domain_error(
            "symmetric route precondition failed: resultant vanishes identically");

    // The elimination above lives in the auxiliary variables U, V; the
    // substitution U -> X+Y, V -> X*Y is injective on polynomials, so the
    // result stays nonzero.
    BivarPoly in_xy = res.eval_generic<BivarPoly>(BivarPoly::X() + BivarPoly::Y(),
                                                  BivarPoly::X() * BivarPoly::Y());
    rep.phi = normalized(std::move(in_xy)).phi;
    rep.matches = rep.phi == modular_polynomial(f, g, scale).phi;
    return rep;
}

}  // namespace modcurve
