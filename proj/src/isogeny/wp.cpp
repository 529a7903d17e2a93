#include "modcurve/isogeny/wp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace modcurve {

namespace {

using Cplx = std::complex<double>;

constexpr double kPoleGuard = 1e-6;    // wp_eval refuses points this close to the lattice
constexpr double kSampleGuard = 1e-2;  // identity checks skip samples this close to a pole
constexpr long kMaxTerms = 4096;

// z = (a + b*tau) * omega1 with a, b in [-1/2, 1/2].
Cplx reduce_to_cell(const WpLattice& lat, Cplx z) {
    Cplx tau = lat.omega2 / lat.omega1;
    Cplx w = z / lat.omega1;
    double b = w.imag() / tau.imag();
    double a = w.real() - b * tau.real();
    a -= std::round(a);
    b -= std::round(b);
    return (a + b * tau) * lat.omega1;
}

}  // namespace

WpLattice::WpLattice(Cplx w1, Cplx w2, double eps) : omega1(w1), omega2(w2), epsilon(eps) {
    if (w1 == Cplx(0.0, 0.0) || !((w2 / w1).imag() > 0.0))
        throw std::domain_error("lattice periods must satisfy Im(omega2/omega1) > 0");
    if (!(eps > 0.0) || eps > 1e-8)
        throw std::domain_error("truncation threshold must lie in (0, 1e-8]");
}

double lattice_distance(const WpLattice& lat, Cplx z) {
    Cplx r = reduce_to_cell(lat, z);
    double best = std::abs(r);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
            Cplx w = double(m) * lat.omega1 + double(n) * lat.omega2;
            best = std::min(best, std::abs(r - w));
        }
    return best;
}

std::complex<double> wp_eval(const WpLattice& lat, Cplx z) {
    if (lattice_distance(lat, z) <= kPoleGuard)
        throw std::domain_error("wp evaluated at a lattice point (pole)");

    const Cplx zr = reduce_to_cell(lat, z);
    const Cplx tau = lat.omega2 / lat.omega1;
    const Cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
    const Cplx u = std::exp(two_pi_i * zr / lat.omega1);
    const Cplx q = std::exp(two_pi_i * tau);

    Cplx sum = 1.0 / 12.0 + u / ((1.0 - u) * (1.0 - u));
    Cplx qn = 1.0;
    for (long n = 1; n <= kMaxTerms; ++n) {
        qn *= q;
        Cplx t1 = qn * u / ((1.0 - qn * u) * (1.0 - qn * u));
        Cplx t2 = (qn / u) / ((1.0 - qn / u) * (1.0 - qn / u));
        Cplx t3 = -2.0 * qn / ((1.0 - qn) * (1.0 - qn));
        sum += t1 + t2 + t3;
        double mag = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
        if (mag < lat.epsilon) {
            Cplx scale = two_pi_i / lat.omega1;
            return scale * scale * sum;
        }
    }
    throw std::runtime_error("wp series did not converge");
}

WpLattice preset_lattice(WpPreset which) {
    if (which == WpPreset::square) return WpLattice(Cplx(1.0, 0.0), Cplx(0.0, 1.0));
    const double pi = std::numbers::pi;
    Cplx omega(std::cos(2.0 * pi / 3.0), std::sin(2.0 * pi / 3.0));
    return WpLattice(Cplx(1.0, 0.0), omega);
}

std::string WpIdentityReport::text() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "max_error=%.6e evaluated=%ld skipped=%ld passed=%s half_periods=%s",
                  max_error, evaluated, skipped, passed ? "true" : "false",
                  swapped_half_periods ? "swapped" : "standard");
    return buf;
}

namespace {

// One pass over the samples for the hexagonal identity with the half-period
// pair (ha, hb) in the roles (shift, companion).
WpIdentityReport hexagonal_pass(const WpLattice& lat, Cplx ha, Cplx hb,
                                const std::vector<Cplx>& samples, double tol, bool perturbed) {
    WpIdentityReport rep;
    const double pi = std::numbers::pi;
    Cplx omega(std::cos(2.0 * pi / 3.0), std::sin(2.0 * pi / 3.0));
    Cplx mult = 1.0 + 2.0 * omega;
    Cplx pa = wp_eval(lat, ha);
    Cplx pb = wp_eval(lat, hb);
    Cplx c = (pb - pa) / (omega - 1.0);
    double front = perturbed ? 5.0 : 4.0;

    for (Cplx z : samples) {
        if (lattice_distance(lat, z) <= kSampleGuard ||
            lattice_distance(lat, mult * z) <= kSampleGuard) {
            ++rep.skipped;
            continue;
        }
        Cplx w = wp_eval(lat, z) - pa + c;
        Cplx den = 3.0 * w * w;
        Cplx num = front * c * c * c - w * w * w;
        if (std::abs(den) <= kSampleGuard * (1.0 + std::abs(num))) {
            ++rep.skipped;
            continue;
        }
        Cplx lhs = wp_eval(lat, mult * z) - pa + c;
        rep.max_error = std::max(rep.max_error, std::abs(lhs - num / den));
        ++rep.evaluated;
    }
    rep.passed = rep.evaluated >= 1 && rep.max_error <= tol;
    return rep;
}

WpIdentityReport square_pass(const WpLattice& lat, const std::vector<Cplx>& samples, double tol,
                             bool perturbed) {
    WpIdentityReport rep;
    const Cplx mult(1.0, 2.0);
    const Cplx minus1_2i(-1.0, 2.0);
    const Cplx front = perturbed ? minus1_2i : minus1_2i * minus1_2i;
    const Cplx one_plus_2i(1.0, 2.0);
    const Cplx one_minus_2i(1.0, -2.0);
    Cplx e = wp_eval(lat, Cplx(0.0, 0.5));
    Cplx e2 = e * e;

    for (Cplx z : samples) {
        if (lattice_distance(lat, z) <= kSampleGuard ||
            lattice_distance(lat, mult * z) <= kSampleGuard) {
            ++rep.skipped;
            continue;
        }
        Cplx p = wp_eval(lat, z);
        Cplx p2 = p * p;
        Cplx dd = 5.0 * p2 - one_minus_2i * e2;
        Cplx num = front * p * (p2 - one_plus_2i * e2) * (p2 - one_plus_2i * e2);
        Cplx den = dd * dd;
        if (std::abs(den) <= kSampleGuard * (1.0 + std::abs(num))) {
            ++rep.skipped;
            continue;
        }
        Cplx lhs = wp_eval(lat, mult * z);
        rep.max_error = std::max(rep.max_error, std::abs(lhs - num / den));
        ++rep.evaluated;
    }
    rep.passed = rep.evaluated >= 1 && rep.max_error <= tol;
    return rep;
}

}  // namespace

WpIdentityReport verify_wp_identity(WpPreset which, const std::vector<Cplx>& samples, double tol,
                                    bool perturbed) {
    WpLattice lat = preset_lattice(which);
    if (which == WpPreset::square) return square_pass(lat, samples, tol, perturbed);

    // Hexagonal: try the displayed assignment first, then the exchanged one;
    // keep whichever passes (or the smaller error if neither does).
    Cplx half(0.5, 0.0);
    Cplx omega_half = lat.omega2 * 0.5;
    WpIdentityReport first = hexagonal_pass(lat, half, omega_half, samples, tol, perturbed);
    if (first.passed) return first;
    WpIdentityReport second = hexagonal_pass(lat, omega_half, half, samples, tol, perturbed);
    second.swapped_half_periods = true;
    if (second.passed) return second;
    return (first.max_error <= second.max_error) ? first : second;
}

WpIdentityReport verify_wp_identity(WpPreset which, double tol, bool perturbed) {
    return verify_wp_identity(
        which, {Cplx(0.23, 0.11), Cplx(0.31, 0.27), Cplx(0.41, 0.13)}, tol, perturbed);
}

}  // namespace modcurve
