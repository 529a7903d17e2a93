#include "modcurve/isogeny/curve.hpp"

#include <stdexcept>

namespace modcurve {

namespace {

using RF = RatFunc<QuadExt>;

// Tracks the single quadratic field all inputs must share; 0 is rational.
void merge_disc(long& acc, long d) {
    if (d == 0) return;
    if (acc == 0) {
        acc = d;
    } else if (acc != d) {
        throw std::domain_error("curve and map coefficients from different quadratic fields");
    }
}

long poly_disc(const Poly<QuadExt>& p) {
    long d = 0;
    for (const QuadExt& c : p.coeffs())
        if (!c.is_rational()) merge_disc(d, c.d());
    return d;
}

long func_disc(const RF& f) {
    long d = poly_disc(f.num());
    merge_disc(d, poly_disc(f.den()));
    return d;
}

RF rf(long n) { return RF(QuadExt(n)); }

}  // namespace

EllCurveHyper::EllCurveHyper(Poly<QuadExt> rhs) : c_(std::move(rhs)) {
    if (c_.degree() != 3 && c_.degree() != 4)
        throw std::domain_error("curve right-hand side must have degree 3 or 4");
    if (gcd_monic(c_, c_.derivative()).degree() != 0)
        throw std::domain_error("curve right-hand side must be squarefree");
    disc_ = poly_disc(c_);
}

IsogenyCheck verify_isogeny(const EllCurveHyper& source, const EllCurveHyper& target,
                            const IsogenyMap& map) {
    long d = source.field_disc();
    merge_disc(d, target.field_disc());
    merge_disc(d, func_disc(map.h));
    merge_disc(d, func_disc(map.g));

    if (map.h.map_degree() < 1) throw std::domain_error("x-coordinate map must be nonconstant");

    RF lhs = target.rhs().template eval<RF>(map.h);
    RF rhs = map.g * map.g * RF(source.rhs());

    IsogenyCheck check;
    check.verified = (lhs == rhs);
    check.degree = map.h.map_degree();
    return check;
}

EllCurveHyper hexagonal_curve() {
    // x^3 - 1
    Poly<QuadExt> x = Poly<QuadExt>::var();
    return EllCurveHyper(x * x * x - Poly<QuadExt>(QuadExt(1)));
}

EllCurveHyper square_curve() {
    // x^3 - x
    Poly<QuadExt> x = Poly<QuadExt>::var();
    return EllCurveHyper(x * x * x - x);
}

IsogenyMap hexagonal_isogeny3() {
    RF x = RF::var();
    RF x3 = x.pow(3);
    IsogenyMap m;
    m.h = (rf(4) - x3) / (rf(3) * x.pow(2));
    // (sqrt(-3)/9) (x^3+8)/x^3
    QuadExt coef(-3, Rat(0), Rat(1) / Rat(9));
    m.g = RF(coef) * (x3 + rf(8)) / x3;
    return m;
}

IsogenyMap square_isogeny5() {
    RF x = RF::var();
    QuadExt u(-1, Rat(-3), Rat(-4));       // (-1+2i)^2
    QuadExt v(-1, Rat(11), Rat(-2));       // (-1+2i)^3
    QuadExt one_plus_2i(-1, Rat(1), Rat(2));
    QuadExt one_minus_2i(-1, Rat(1), Rat(-2));
    QuadExt eight_i_plus_2(-1, Rat(2), Rat(8));

    RF quad = x.pow(2) - RF(one_plus_2i);             // x^2 - (1+2i)
    RF den = rf(5) * x.pow(2) - RF(one_minus_2i);     // 5x^2 - (1-2i)
    RF quartic = x.pow(4) + RF(eight_i_plus_2) * x.pow(2) + rf(1);

    IsogenyMap m;
    m.h = RF(u) * x * quad.pow(2) / den.pow(2);
    m.g = RF(v) * quad * quartic / den.pow(3);
    return m;
}

}  // namespace modcurve
