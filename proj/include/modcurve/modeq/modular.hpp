#pragma once

#include <string>

#include "modcurve/arith/bivar.hpp"
#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/rational.hpp"
#include "modcurve/belyi/ratmap.hpp"

namespace modcurve {

// Bivariate polynomial Phi with Phi(scale*f(z), scale*g(z)) == 0, obtained
// by eliminating z between the two scaled maps.  Phi is primitive (integer
// content 1) and sign-normalized so that its lex-leading coefficient
// (X before Y) is positive.
struct ModularPolynomial {
    BivarPoly phi;
    long level = 0;             // 0 when built from explicit maps
    Int content_removed{1};     // positive integer content divided out of the resultant
    bool sign_flipped = false;  // whether normalization negated the resultant
    bool symmetric = false;     // phi(X, Y) == phi(Y, X)
    bool leading_one = false;   // coefficient of the highest pure power of X is +1

    std::string text() const { return phi.text(); }
};

// Phi = Res_z(scale*N_f(z) - X*D_f(z), scale*N_g(z) - Y*D_g(z)) where
// f = N_f/D_f and g = N_g/D_g in lowest terms, followed by content and sign
// normalization.  Bidegree: deg_X Phi = deg g, deg_Y Phi = deg f.
//
// pre:   f and g have rational coefficients; scale != 0.
// error: std::domain_error if the resultant vanishes identically, if a map
//        has irrational coefficients, or if scale == 0.
ModularPolynomial modular_polynomial(const RatMap& f, const RatMap& g,
                                     const Int& scale = Int(1728));

// The classical modular equation Phi_2 or Phi_3 relating j(t) and j(N*t),
// computed from the stored degree-3 (level 2) or degree-4 (level 3) map
// pair with scale 1728.  error: std::domain_error for any other level.
ModularPolynomial modular_polynomial_level(long level);

// True exactly when g == f o M and f == g o M as rational maps.
// pre: M has degree one (else std::domain_error).
bool involution_check(const RatMap& f, const RatMap& g, const RatMap& mobius);

// Second, independent elimination route.  With F = 1728*f(z+shift) and
// G = 1728*g(z+shift), the sum F+G and product F*G must be palindromic
// Laurent polynomials in z; they then descend to polynomials p, q in
// y = z + 1/z.  Eliminating y from (p(y) - U, q(y) - V) and substituting
// U -> X+Y, V -> X*Y yields the same primitive polynomial as
// modular_polynomial(f, g) whenever the maps trace the same curve with
// multiplicity one.
struct SymmetricRouteReport {
    Poly<Rat> p;         // reduction of F + G in y = z + 1/z
    Poly<Rat> q;         // reduction of F * G in y = z + 1/z
    BivarPoly phi;       // normalized Res_y(p - U, q - V) at U = X+Y, V = X*Y
    bool matches = false;  // phi equals the direct-route polynomial exactly
};

// error: std::domain_error (message prefixed "symmetric route precondition
// failed") when a shifted sum/product is not a Laurent polynomial or not
// palindromic, and when the elimination degenerates.
SymmetricRouteReport symmetric_route_check(const RatMap& f, const RatMap& g,
                                           const Rat& shift);

}  // namespace modcurve
