#pragma once

#include <string>

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/ratfunc.hpp"

namespace modcurve {

// Elliptic curve in hyperelliptic form y^2 = C(x), with C squarefree of
// degree 3 or 4 over the rationals or one quadratic extension.
class EllCurveHyper {
  public:
    explicit EllCurveHyper(Poly<QuadExt> rhs);

    const Poly<QuadExt>& rhs() const { return c_; }
    // 0 when every coefficient is rational, else the radicand d.
    long field_disc() const { return disc_; }
    std::string text(const std::string& var = "x") const {
        return "y^2 = " + c_.text(var);
    }

    friend bool operator==(const EllCurveHyper& a, const EllCurveHyper& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const EllCurveHyper& a, const EllCurveHyper& b) { return !(a == b); }

  private:
    Poly<QuadExt> c_;
    long disc_ = 0;
};

// Map (x, y) -> (h(x), g(x) y) between curves in hyperelliptic form.
struct IsogenyMap {
    RatFunc<QuadExt> h;  // x-coordinate map
    RatFunc<QuadExt> g;  // y-multiplier
};

struct IsogenyCheck {
    bool verified = false;
    long degree = 0;  // degree of the x-coordinate map
};

// Exact verification that C_target(h(x)) == g(x)^2 * C_source(x) as rational
// functions, i.e. that (x, y) -> (h(x), g(x) y) maps y^2 = C_source(x) into
// y^2 = C_target(x).  Only g^2 enters, so both choices of sign for g verify.
// Throws std::domain_error when the curves and map coefficients do not lie
// in one common quadratic field.
IsogenyCheck verify_isogeny(const EllCurveHyper& source, const EllCurveHyper& target,
                            const IsogenyMap& map);

// y^2 = x^3 - 1 (period lattice proportional to Z + Z e^{2 pi i/3}).
EllCurveHyper hexagonal_curve();
// y^2 = x^3 - x (period lattice proportional to Z + Z i).
EllCurveHyper square_curve();

// Degree-3 self-isogeny of the hexagonal curve,
// (x, y) -> ((4-x^3)/(3x^2), (sqrt(-3)/9)(x^3+8)/x^3 * y).
IsogenyMap hexagonal_isogeny3();
// Degree-5 self-isogeny of the square curve,
// (x, y) -> ((-1+2i)^2 x(x^2-(1+2i))^2/(5x^2-(1-2i))^2,
//            (-1+2i)^3 (x^2-(1+2i))(x^4+(8i+2)x^2+1)/(5x^2-(1-2i))^3 * y).
IsogenyMap square_isogeny5();

}  // namespace modcurve
