#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "modcurve/isogeny/curve.hpp"
#include "modcurve/isogeny/wp.hpp"
#include "support/wp_oracle.hpp"

using namespace modcurve;

namespace {

using RF = RatFunc<QuadExt>;
using Cplx = std::complex<double>;

RF rf(long n) { return RF(QuadExt(n)); }

}  // namespace

TEST_CASE("preset self-isogenies verify exactly with the right degrees") {
    EllCurveHyper hex = hexagonal_curve();
    EllCurveHyper sq = square_curve();

    IsogenyCheck c3 = verify_isogeny(hex, hex, hexagonal_isogeny3());
    CHECK(c3.verified);
    CHECK(c3.degree == 3);

    IsogenyCheck c5 = verify_isogeny(sq, sq, square_isogeny5());
    CHECK(c5.verified);
    CHECK(c5.degree == 5);

    // Identity map on either curve.
    IsogenyMap id{RF::var(), rf(1)};
    CHECK(verify_isogeny(hex, hex, id).verified);
    CHECK(verify_isogeny(hex, hex, id).degree == 1);
    CHECK(verify_isogeny(sq, sq, id).verified);

    // Only g^2 enters, so the sign of g is immaterial.
    for (IsogenyMap m : {hexagonal_isogeny3()}) {
        m.g = RF(QuadExt(-1)) * m.g;
        CHECK(verify_isogeny(hex, hex, m).verified);
    }
    for (IsogenyMap m : {square_isogeny5()}) {
        m.g = RF(QuadExt(-1)) * m.g;
        CHECK(verify_isogeny(sq, sq, m).verified);
    }
}

TEST_CASE("multiplier identity for the trisection holds already over the rationals") {
    RF x = RF::var();
    RF h = hexagonal_isogeny3().h;
    RF lhs = (h.pow(3) - rf(1)) / (x.pow(3) - rf(1));
    RF rhs = rf(-1) / rf(27) * (x.pow(3) + rf(8)).pow(2) / x.pow(6);
    CHECK(lhs == rhs);

    // And it equals g^2, whose irrational coefficient squares away.
    RF g = hexagonal_isogeny3().g;
    CHECK(lhs == g * g);
}

TEST_CASE("curve validation") {
    Poly<QuadExt> x = Poly<QuadExt>::var();
    CHECK_THROWS_AS(EllCurveHyper(x * x * x), std::domain_error);             // x^3 not squarefree
    CHECK_THROWS_AS(EllCurveHyper(x * x - Poly<QuadExt>(QuadExt(1))), std::domain_error);
    CHECK_THROWS_AS(EllCurveHyper(x * x * x * x * x - x), std::domain_error);  // degree 5
    EllCurveHyper quartic(x * x * x * x - Poly<QuadExt>(QuadExt(1)));
    CHECK(quartic.rhs().degree() == 4);
    CHECK(quartic.field_disc() == 0);
    CHECK(hexagonal_curve().text() == "y^2 = x^3-1");
    CHECK(square_curve().text() == "y^2 = x^3-x");
}

TEST_CASE("coefficients from different quadratic fields are rejected") {
    EllCurveHyper hex = hexagonal_curve();
    IsogenyMap mixed;
    mixed.h = RF::var() + RF(QuadExt::sqrt_of(3));
    mixed.g = RF(QuadExt::sqrt_of(-1));
    CHECK_THROWS_AS(verify_isogeny(hex, hex, mixed), std::domain_error);
}

TEST_CASE("a wrong map fails verification without error") {
    EllCurveHyper hex = hexagonal_curve();
    IsogenyMap m = hexagonal_isogeny3();
    m.g = rf(2) * m.g;
    IsogenyCheck c = verify_isogeny(hex, hex, m);
    CHECK_FALSE(c.verified);
    CHECK(c.degree == 3);
}

TEST_CASE("q-series evaluator matches the direct lattice-sum oracle") {
    const Cplx samples[] = {Cplx(0.5, 0.0), Cplx(0.23, 0.11), Cplx(0.31, 0.27),
                            Cplx(0.41, 0.13), Cplx(0.37, 0.19)};
    for (WpPreset which : {WpPreset::hexagonal, WpPreset::square}) {
        WpLattice lat = preset_lattice(which);
        for (Cplx z : samples) {
            Cplx fast = wp_eval(lat, z);
            Cplx slow = testsupport::wp_direct_sum(z, lat.omega1, lat.omega2);
            CHECK(std::abs(fast - slow) <= 1e-6);
        }
    }

    // Classical real values at the half-period 1/2.
    WpLattice sq = preset_lattice(WpPreset::square);
    Cplx e1 = wp_eval(sq, Cplx(0.5, 0.0));
    CHECK(std::abs(e1 - Cplx(6.8751858180203652, 0.0)) <= 1e-9);
    WpLattice hex = preset_lattice(WpPreset::hexagonal);
    Cplx f1 = wp_eval(hex, Cplx(0.5, 0.0));
    CHECK(std::abs(f1 - Cplx(5.8983439694847730, 0.0)) <= 1e-9);
}

TEST_CASE("evenness and periodicity of the evaluator") {
    std::mt19937_64 rng(20259);
    std::uniform_real_distribution<double> coord(-0.45, 0.45);
    for (WpPreset which : {WpPreset::hexagonal, WpPreset::square}) {
        WpLattice lat = preset_lattice(which);
        double bound = 10.0 * lat.epsilon;
        long done = 0;
        while (done < 20) {
            double a = coord(rng);
            double b = coord(rng);
            Cplx z = a * lat.omega1 + b * lat.omega2;
            if (lattice_distance(lat, z) < 0.05) continue;
            Cplx v = wp_eval(lat, z);
            CHECK(std::abs(v - wp_eval(lat, -z)) <= bound);
            CHECK(std::abs(v - wp_eval(lat, z + lat.omega1)) <= bound);
            CHECK(std::abs(v - wp_eval(lat, z + lat.omega2)) <= bound);
            ++done;
        }
    }
}

TEST_CASE("lattice and evaluation-point validation") {
    CHECK_THROWS_AS(WpLattice(Cplx(1.0, 0.0), Cplx(2.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(WpLattice(Cplx(1.0, 0.0), Cplx(0.0, -1.0)), std::domain_error);
    CHECK_THROWS_AS(WpLattice(Cplx(0.0, 0.0), Cplx(0.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(WpLattice(Cplx(1.0, 0.0), Cplx(0.0, 1.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(WpLattice(Cplx(1.0, 0.0), Cplx(0.0, 1.0), 1e-7), std::domain_error);

    WpLattice lat = preset_lattice(WpPreset::square);
    CHECK_THROWS_AS(wp_eval(lat, Cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(wp_eval(lat, Cplx(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(wp_eval(lat, Cplx(3.0, 2.0)), std::domain_error);
    CHECK_THROWS_AS(wp_eval(lat, Cplx(1e-7, 0.0)), std::domain_error);
    CHECK(lattice_distance(lat, Cplx(7.5, -3.0)) == doctest::Approx(0.5));
}

TEST_CASE("both multiplication identities hold at the default samples") {
    WpIdentityReport sq = verify_wp_identity(WpPreset::square);
    CHECK(sq.passed);
    CHECK(sq.evaluated == 3);
    CHECK(sq.skipped == 0);
    CHECK(sq.max_error <= 1e-6);
    CHECK_FALSE(sq.swapped_half_periods);

    WpIdentityReport hex = verify_wp_identity(WpPreset::hexagonal);
    CHECK(hex.passed);
    CHECK(hex.evaluated == 3);
    CHECK(hex.skipped == 0);
    CHECK(hex.max_error <= 1e-6);
    // The identity holds with the half-periods in the displayed order.
    CHECK_FALSE(hex.swapped_half_periods);

    std::string t = sq.text();
    CHECK(t.find("passed=true") != std::string::npos);
    CHECK(t.find("half_periods=standard") != std::string::npos);
}

TEST_CASE("perturbed identities fail loudly") {
    WpIdentityReport sq = verify_wp_identity(WpPreset::square, 1e-6, true);
    CHECK_FALSE(sq.passed);
    CHECK(sq.max_error > 1e-3);

    WpIdentityReport hex = verify_wp_identity(WpPreset::hexagonal, 1e-6, true);
    CHECK_FALSE(hex.passed);
    CHECK(hex.max_error > 1e-3);
}

TEST_CASE("samples near poles are skipped and counted") {
    // First sample sits 1e-3 from the lattice point 1; second maps to the
    // lattice under multiplication by 1+2i ((1+2i)(0.6-0.2i) = 1+i); the
    // last is a good sample.
    std::vector<Cplx> samples = {Cplx(1.0, 0.001), Cplx(0.6, -0.2), Cplx(0.23, 0.11)};
    WpIdentityReport rep = verify_wp_identity(WpPreset::square, samples);
    CHECK(rep.skipped == 2);
    CHECK(rep.evaluated == 1);
    CHECK(rep.passed);

    // All samples degenerate: nothing evaluated, cannot pass.
    WpIdentityReport none = verify_wp_identity(WpPreset::square, {Cplx(1.0, 0.001)});
    CHECK(none.skipped == 1);
    CHECK(none.evaluated == 0);
    CHECK_FALSE(none.passed);
}
