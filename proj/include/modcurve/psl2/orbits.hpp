#pragma once

#include <vector>

#include "modcurve/arith/quadext.hpp"
#include "modcurve/psl2/mat.hpp"

namespace modcurve {

// Base point of the upper half-plane: i (square lattice) or
// rho = e^{i pi/3} = (1 + sqrt(-3))/2 (hexagonal lattice).
enum class BasePoint { I, Rho };

QuadExt base_point_value(BasePoint tau);

// A point M * tau of the upper half-plane, given by a rational matrix
// M = [[a, b], [c, d]] of positive determinant acting by Moebius
// transformation on the base point.
struct OrbitPoint {
    BasePoint base = BasePoint::I;
    Rat a{1}, b{0}, c{0}, d{1};

    OrbitPoint() = default;
    OrbitPoint(BasePoint tau, Rat a_, Rat b_, Rat c_, Rat d_);  // requires det > 0
    OrbitPoint(BasePoint tau, const Mat& m);

    Rat det() const { return a * d - b * c; }
    QuadExt value() const;  // exact value in Q(i) or Q(sqrt(-3))
};

// Whether some element of +-Gamma_0(N) maps p1 to p2.  Points over distinct
// base tags are never equivalent.  Decided exactly: u maps p1 to p2 iff
// adj(M2) u M1 lies in the rank-two algebra Z[J] spanned by the stabilizer
// generator J of the base point (J = S for i, J = TS for rho), so candidates
// u are enumerated from the finitely many integer pairs (x, y) with
// det(x I + y J) = det(M1) det(M2).
bool points_equivalent(long N, const OrbitPoint& p1, const OrbitPoint& p2);

// Whether a nontrivial element of the projective Gamma_0(N) fixes p.
bool point_elliptic(long N, const OrbitPoint& p);

struct ScaledOrbit {
    std::vector<OrbitPoint> points;
    bool elliptic = false;
};

// The mu = [Gamma(1) : Gamma_0(N)] points gamma^t * tau / N, for gamma over a
// left-coset representative system of Gamma_0(N) in Gamma(1), partitioned
// into Gamma_0(N)-orbits (N >= 2).  Representatives are adjusted within
// their cosets so the point values are pairwise distinct; orbits are listed
// by first point, points in representative order.
std::vector<ScaledOrbit> scaled_orbit_partition(long N, BasePoint tau);

}  // namespace modcurve
