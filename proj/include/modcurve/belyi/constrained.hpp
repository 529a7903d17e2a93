#pragma once

namespace modcurve {

// Exact checks of the polynomial identity
//
//   t*(t + (a+b)^3)^3 - 8*(a+b)^3 * (t - ((a+b)/2)^3)^3
//       == (t - a^3)^2 * (t - b^3)^2
//
// valid whenever a^2 + 4ab + b^2 = 0.  It explains why one fiber of the
// degree-4 map t(t+(a+b)^3)^3 / (8(a+b)^3 (t-((a+b)/2)^3)^3) consists of two
// double points.
struct ConstrainedIdentityReport {
    bool concrete = false;         // a = 1+sqrt(3), b = 1-sqrt(3)
    bool parametric = false;       // a = s, b = (-2+sqrt(3))s, as polynomials in s
    bool perturbed_holds = true;   // scale 1/72 in place of 1/64 (expected: false)
    bool all_ok() const { return concrete && parametric && !perturbed_holds; }
};

// Instance a = 1+sqrt(3), b = 1-sqrt(3):
//   (1/64) t(t+8)^3 - (t-1)^3 == (1/64)(t^2-20t-8)^2  over Q(sqrt(3)).
bool constrained_identity_concrete();

// One-parameter family a = s, b = (-2+sqrt(3))s, checked with coefficients
// that are themselves polynomials in s (no specialization).
bool constrained_identity_parametric();

// Same shape as the concrete instance but scaled by 1/72; returns whether
// that variant holds (it must not).
bool constrained_identity_perturbed();

ConstrainedIdentityReport constrained_identity_check();

}  // namespace modcurve
