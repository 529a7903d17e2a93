#pragma once

#include <string>
#include <vector>

#include "modcurve/psl2/coset.hpp"
#include "modcurve/psl2/subgroup.hpp"

namespace modcurve {

// Point of the rational boundary P^1(Q): a reduced pair (p : q) with q >= 0,
// where infinity is (1 : 0).  (p, q) and (-p, -q) are identified.
struct Cusp {
    Int p{1};
    Int q{0};

    Cusp() = default;            // infinity
    Cusp(Int pp, Int qq);        // reduces and normalizes the sign
    Cusp(long pp, long qq) : Cusp(Int(pp), Int(qq)) {}

    bool is_infinity() const { return q == 0; }

    friend bool operator==(const Cusp& x, const Cusp& y) { return x.p == y.p && x.q == y.q; }
    friend bool operator!=(const Cusp& x, const Cusp& y) { return !(x == y); }
    friend bool operator<(const Cusp& x, const Cusp& y) {
        return x.p < y.p || (x.p == y.p && x.q < y.q);
    }

    std::string text() const;  // "inf", "p", or "p/q"
};

// Accepts "inf", an integer, or "p/q".
Cusp parse_cusp(const std::string& s);

// A determinant-one integer matrix sending infinity to c.
Mat gamma_for_cusp(const Cusp& c);

// Image of c under the Moebius action of g.
Cusp apply_mat(const Mat& g, const Cusp& c);

// Least k >= 1 such that gamma T^k gamma^-1 lies in the subgroup (gamma maps
// infinity to c); throws std::domain_error past an iteration cap of 10000.
long cusp_width(const SubgroupSpec& spec, const Cusp& c);

// One equivalence class of cusps under the subgroup.
struct CuspClass {
    Cusp rep;                  // least-coset-index representative
    long width = 1;            // sigma_T cycle length through the class
    std::vector<long> cosets;  // cosets in the sigma_T cycle, least first
};

// Cusp classes read off a full-ambient coset table: one class per sigma_T
// cycle, ordered by least coset index in the cycle.  The representative is
// (representative of the least coset) * infinity.  Throws std::domain_error
// for a level-two-ambient table.
std::vector<CuspClass> cusp_classes(const CosetTable& table);

// Position in cusp_classes(table) of the class containing c.
long classify_cusp(const CosetTable& table, const Cusp& c);

bool cusps_equivalent(const CosetTable& table, const Cusp& a, const Cusp& b);

// Partition the given cusps into subgroup-equivalence classes (classes
// ordered by first appearance; input order kept within a class).
std::vector<std::vector<Cusp>> cusp_orbit_classify(const CosetTable& table,
                                                   const std::vector<Cusp>& cusps);

// Same, from a subgroup spec.  The level-two principal group uses the parity
// rule (numerator/denominator parities decide the class among 0, 1,
// infinity); other specs build the coset table.
std::vector<std::vector<Cusp>> cusp_orbit_classify(const SubgroupSpec& spec,
                                                   const std::vector<Cusp>& cusps);

// Parity rule for the level-two principal group: the class representative
// (0, 1 or infinity) of c.
Cusp gamma2_cusp_class(const Cusp& c);

// Numeric invariants of the subgroup of a full-ambient table: nu2 and nu3
// count fixed points of sigma_S and sigma_ST, cusps come from sigma_T cycles,
// and genus = 1 + m/12 - nu2/4 - nu3/3 - nu_inf/2.
struct SubgroupInvariants {
    long index = 1;
    long genus = 0;
    long nu2 = 0;
    long nu3 = 0;
    std::vector<CuspClass> cusps;
};

SubgroupInvariants subgroup_invariants(const CosetTable& table);

}  // namespace modcurve
