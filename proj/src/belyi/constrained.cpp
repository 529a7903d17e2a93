#include "modcurve/belyi/constrained.hpp"

#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/rational.hpp"

namespace modcurve {
namespace {

template <class R>
Poly<R> square(const Poly<R>& p) {
    return p * p;
}

template <class R>
Poly<R> cube(const Poly<R>& p) {
    return p * p * p;
}

// (1/m) t(t+8)^3 - (t-1)^3 == (1/m)(t-a^3)^2 (t-b^3)^2 with a = 1+sqrt(3),
// b = 1-sqrt(3); a^3 = 10+6sqrt(3), b^3 = 10-6sqrt(3), so the right-hand
// quartic is (t^2-20t-8)^2.  The identity requires m = 8(a+b)^3 = 64.
bool concrete_with_scale(long m) {
    using P = Poly<QuadExt>;
    const QuadExt k = QuadExt(1) / QuadExt(m);
    const P t = P::var();
    const P lhs = k * (t * cube(t + P(QuadExt(8)))) - cube(t - P(QuadExt(1)));
    const P a3(QuadExt(3, Rat(10), Rat(6)));
    const P b3(QuadExt(3, Rat(10), Rat(-6)));
    const P rhs = k * (square(t - a3) * square(t - b3));
    return lhs == rhs;
}

}  // namespace

bool constrained_identity_concrete() { return concrete_with_scale(64); }

bool constrained_identity_perturbed() { return concrete_with_scale(72); }

bool constrained_identity_parametric() {
    // Coefficients are polynomials in s; the outer variable is t.
    using S = Poly<QuadExt>;
    using P = Poly<S>;

    const S s = S::var();
    const S a = s;                                         // a = s
    const S b = s * S(QuadExt(3, Rat(-2), Rat(1)));        // b = (-2+sqrt(3)) s

    // Constraint a^2 + 4ab + b^2 = 0 holds identically in s.
    if (!(a * a + S(QuadExt(4)) * a * b + b * b).is_zero()) return false;

    const S c = cube(a + b);                               // (a+b)^3 = (-10+6sqrt(3)) s^3
    const S c8 = c * S(QuadExt(1) / QuadExt(8));           // ((a+b)/2)^3

    const P t = P::var();
    // Cleared by 8(a+b)^3: t(t+c)^3 - 8c (t-c/8)^3 == (t-a^3)^2 (t-b^3)^2.
    const P lhs = t * cube(t + P(c)) - P(S(QuadExt(8)) * c) * cube(t - P(c8));
    const P rhs = square(t - P(cube(a))) * square(t - P(cube(b)));
    return lhs == rhs;
}

ConstrainedIdentityReport constrained_identity_check() {
    ConstrainedIdentityReport r;
    r.concrete = constrained_identity_concrete();
    r.parametric = constrained_identity_parametric();
    r.perturbed_holds = constrained_identity_perturbed();
    return r;
}

}  // namespace modcurve
