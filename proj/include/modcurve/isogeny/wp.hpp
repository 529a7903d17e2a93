#pragma once

#include <complex>
#include <string>
#include <vector>

namespace modcurve {

// Lattice Z*omega1 + Z*omega2 with Im(omega2/omega1) > 0, together with the
// truncation threshold for the exponential series of the Weierstrass
// function.  Validation throws std::domain_error for a degenerate pair or a
// threshold outside (0, 1e-8].
struct WpLattice {
    std::complex<double> omega1;
    std::complex<double> omega2;
    double epsilon;

    explicit WpLattice(std::complex<double> w1, std::complex<double> w2, double eps = 1e-12);
};

// Weierstrass wp(z) for the lattice, via the exponential series in
// u = e^{2 pi i z/omega1} and q = e^{2 pi i omega2/omega1} after reducing z
// into the fundamental cell; terms are summed until they fall below the
// lattice's epsilon.  Throws std::domain_error when z is within 1e-6 of a
// lattice point (pole).
std::complex<double> wp_eval(const WpLattice& lat, std::complex<double> z);

// Distance from z to the nearest lattice point.
double lattice_distance(const WpLattice& lat, std::complex<double> z);

// The two self-isogeny identities checked numerically:
//   hexagonal: lattice Z + Z w, w = e^{2 pi i/3}, multiplier 1+2w, with
//     c = (wp(w/2) - wp(1/2))/(w-1) and W(z) = wp(z) - wp(1/2) + c:
//     wp((1+2w)z) - wp(1/2) + c == (4c^3 - W(z)^3) / (3 W(z)^2).
//   square: lattice Z + Z i, multiplier 1+2i, p = wp(z), e = wp(i/2):
//     wp((1+2i)z) == (-1+2i)^2 p (p^2-(1+2i)e^2)^2 / (5p^2-(1-2i)e^2)^2.
enum class WpPreset { hexagonal, square };

WpLattice preset_lattice(WpPreset which);

struct WpIdentityReport {
    double max_error = 0.0;  // max |lhs - rhs| over evaluated samples
    long evaluated = 0;
    long skipped = 0;        // samples too close to a pole of either side
    bool passed = false;     // evaluated >= 1 and max_error <= tol
    // The hexagonal identity is checked as displayed and, if that fails,
    // with the two half-periods 1/2 and w/2 exchanged; this records which
    // assignment the report refers to.  Always false for the square preset.
    bool swapped_half_periods = false;

    std::string text() const;
};

// Evaluates both sides of the preset identity at the samples, skipping any
// sample within 1e-2 of a lattice point (either of z or of the multiplied
// argument) or at which a denominator nearly vanishes.  When `perturbed` is
// set, the square identity's front coefficient (-1+2i)^2 is replaced by
// (-1+2i) and the hexagonal numerator constant 4c^3 by 5c^3; the perturbed
// variants must fail.
WpIdentityReport verify_wp_identity(WpPreset which,
                                    const std::vector<std::complex<double>>& samples,
                                    double tol = 1e-6, bool perturbed = false);

// Same, at the default samples {0.23+0.11i, 0.31+0.27i, 0.41+0.13i}.
WpIdentityReport verify_wp_identity(WpPreset which, double tol = 1e-6, bool perturbed = false);

}  // namespace modcurve
