#include "modcurve/psl2/orbits.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

#include "modcurve/psl2/coset.hpp"
#include "residues.hpp"

namespace modcurve {

QuadExt base_point_value(BasePoint tau) {
    if (tau == BasePoint::I) return QuadExt::sqrt_of(-1);
    Rat half(1, 2);
    return QuadExt(-3, half, half);  // (1 + sqrt(-3)) / 2
}

OrbitPoint::OrbitPoint(BasePoint tau, Rat a_, Rat b_, Rat c_, Rat d_)
    : base(tau), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (sgn(det()) <= 0) throw std::domain_error("orbit point matrix must have positive determinant");
}

OrbitPoint::OrbitPoint(BasePoint tau, const Mat& m)
    : OrbitPoint(tau, Rat(m.a), Rat(m.b), Rat(m.c), Rat(m.d)) {}

QuadExt OrbitPoint::value() const {
    QuadExt t = base_point_value(base);
    return (QuadExt(a) * t + QuadExt(b)) / (QuadExt(c) * t + QuadExt(d));
}

namespace {

// Integer generator of the projective stabilizer of the base point:
// S = [[0,-1],[1,0]] fixes i and TS = [[1,-1],[1,0]] fixes rho.
Mat stabilizer_generator(BasePoint tau) {
    return tau == BasePoint::I ? mat_S() : mat_T() * mat_S();
}

// det(x I + y J): x^2 + y^2 over i, x^2 + x y + y^2 over rho.
Int pair_form(BasePoint tau, long x, long y) {
    Int xi(x), yi(y);
    Int f = xi * xi + yi * yi;
    if (tau == BasePoint::Rho) f += xi * yi;
    return f;
}

// Primitive integer matrix with the same Moebius action as the rational
// matrix of p (clear denominators, divide by the entry gcd).
Mat primitive_integer_matrix(const OrbitPoint& p) {
    Int l = lcm(lcm(p.a.get_den(), p.b.get_den()), lcm(p.c.get_den(), p.d.get_den()));
    auto scaled = [&](const Rat& r) { return Int(r.get_num() * (l / r.get_den())); };
    Int a = scaled(p.a), b = scaled(p.b), c = scaled(p.c), d = scaled(p.d);
    Int g = gcd(gcd(a, b), gcd(c, d));
    return Mat(a / g, b / g, c / g, d / g);
}

bool divisible(const Int& v, const Int& m) {
    return mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t()) != 0;
}

// Search for u in +-Gamma_0(N) with u M1 tau = M2 tau.  Any such u satisfies
// adj(M2) u M1 = x I + y J with det(x I + y J) = det(M1) det(M2), so u is
// recovered as M2 (x I + y J) adj(M1) / (det(M1) det(M2)) when that clears to
// an integer matrix with lower-left entry divisible by N.  When skip_trivial
// is set, scalar candidates (y = 0, giving u = +-I) are ignored.
bool transporter_exists(long N, BasePoint tau, const Mat& m1, const Mat& m2, bool skip_trivial) {
    Int target = m1.det() * m2.det();
    if (sgn(target) <= 0) throw std::logic_error("point matrices must have positive determinant");
    Mat j = stabilizer_generator(tau);
    // |y| is bounded by sqrt(target) (square form) or sqrt(4 target / 3)
    // (hexagonal form), and the forms are symmetric in x, y.
    Int bsq = tau == BasePoint::I ? target : Int(4) * target / 3;
    long bound = to_long_checked(Int(sqrt(bsq)), "stabilizer search bound") + 1;
    Mat adj1 = m1.adjugate();
    for (long x = -bound; x <= bound; ++x) {
        for (long y = -bound; y <= bound; ++y) {
            if (skip_trivial && y == 0) continue;
            if (pair_form(tau, x, y) != target) continue;
            Mat p(Int(x) + Int(y) * j.a, Int(y) * j.b, Int(y) * j.c, Int(x) + Int(y) * j.d);
            Mat w = m2 * p * adj1;
            if (!divisible(w.a, target) || !divisible(w.b, target) || !divisible(w.c, target) ||
                !divisible(w.d, target))
                continue;
            Mat u(w.a / target, w.b / target, w.c / target, w.d / target);
            if (u.det() == 1 && divisible(u.c, Int(N))) return true;
        }
    }
    return false;
}

}  // namespace

bool points_equivalent(long N, const OrbitPoint& p1, const OrbitPoint& p2) {
    if (N < 1) throw std::domain_error("level must be >= 1");
    if (p1.base != p2.base) return false;
    return transporter_exists(N, p1.base, primitive_integer_matrix(p1),
                              primitive_integer_matrix(p2), false);
}

bool point_elliptic(long N, const OrbitPoint& p) {
    if (N < 1) throw std::domain_error("level must be >= 1");
    Mat m = primitive_integer_matrix(p);
    return transporter_exists(N, p.base, m, m, true);
}

std::vector<ScaledOrbit> scaled_orbit_partition(long N, BasePoint tau) {
    if (N < 2) throw std::domain_error("scaled orbits require N >= 2");

    // Left-coset representatives of Gamma_0(N) by BFS, prepending S or T; the
    // coset label is the least projective residue of gamma * h over the
    // upper-triangular classes h mod N.
    auto classes = detail::upper_triangular_classes(N);
    auto label = [&](const Mat& g) {
        std::array<long, 4> best{};
        bool first = true;
        for (const Mat& h : classes) {
            auto key = detail::mod_canonical(g * h, N);
            if (first || key < best) {
                best = key;
                first = false;
            }
        }
        return best;
    };

    std::vector<Mat> reps{Mat()};
    std::map<std::array<long, 4>, long> seen{{label(Mat()), 0}};
    std::deque<Mat> queue{Mat()};
    while (!queue.empty()) {
        Mat cur = queue.front();
        queue.pop_front();
        for (const Mat& g : {mat_S(), mat_T()}) {
            Mat nxt = g * cur;
            auto l = label(nxt);
            if (!seen.count(l)) {
                seen[l] = static_cast<long>(reps.size());
                reps.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    if (Int(static_cast<long>(reps.size())) != index_gamma_zero(N))
        throw std::logic_error("left-coset enumeration does not match the index formula");

    // Point for representative gamma: gamma^t * tau / N.
    auto point_of = [&](const Mat& g) {
        Mat t = g.transpose();
        return OrbitPoint(tau, Mat(t.a, t.b, Int(N) * t.c, Int(N) * t.d));
    };

    // Distinct representatives of one coset may still give one point value
    // (the base point has stabilizers); slide the representative along T in
    // Gamma_0(N) until all values are distinct.
    std::vector<OrbitPoint> points;
    std::vector<QuadExt> values;
    for (const Mat& rep : reps) {
        Mat g = rep;
        OrbitPoint p = point_of(g);
        QuadExt v = p.value();
        while (std::find(values.begin(), values.end(), v) != values.end()) {
            g = g * mat_T();
            p = point_of(g);
            v = p.value();
        }
        points.push_back(p);
        values.push_back(v);
    }

    std::vector<ScaledOrbit> orbits;
    std::vector<bool> used(points.size(), false);
    for (size_t i = 0; i < points.size(); ++i) {
        if (used[i]) continue;
        ScaledOrbit orb;
        orb.points.push_back(points[i]);
        used[i] = true;
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (!used[j] && points_equivalent(N, points[i], points[j])) {
                orb.points.push_back(points[j]);
                used[j] = true;
            }
        }
        orb.elliptic = point_elliptic(N, orb.points.front());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

}  // namespace modcurve
