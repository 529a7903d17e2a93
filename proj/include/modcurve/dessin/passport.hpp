#pragma once

#include <string>
#include <vector>

#include "modcurve/perm.hpp"
#include "modcurve/psl2/coset.hpp"

namespace modcurve {

// Monodromy of a three-point-ramified cover of the sphere: permutations of
// the m sheets over 0, 1 and infinity.  Composition applies sigma_inf first:
// the product sigma0 sigma1 sigma_inf (right-to-left application) is the
// identity and the three permutations generate a transitive group.
struct MonodromyTriple {
    Perm sigma0;
    Perm sigma1;
    Perm sigma_inf;

    long degree() const { return sigma0.size(); }
    bool valid() const;
    void validate() const;  // throws std::domain_error with the failed condition
};

// Degree, genus and the three cycle-type partitions of a dessin.  For
// dessins coming from a full-ambient coset table the elliptic/cusp counts
// nu2, nu3, nu_inf are recorded as well.
struct DessinPassport {
    long m = 1;
    long genus = 0;
    std::vector<long> black;  // partition over 0, descending
    std::vector<long> white;  // partition over 1, descending
    std::vector<long> faces;  // partition over infinity, descending

    bool has_counts = false;
    long nu2 = 0;
    long nu3 = 0;
    long nu_inf = 0;

    std::string text() const;  // "m=..; g=..; black=[..]; white=[..]; faces=[..]"

    friend bool operator==(const DessinPassport& x, const DessinPassport& y) {
        return x.m == y.m && x.genus == y.genus && x.black == y.black && x.white == y.white &&
               x.faces == y.faces;
    }
    friend bool operator!=(const DessinPassport& x, const DessinPassport& y) { return !(x == y); }
};

// Triple of a full-ambient table: sigma0 = right action of ST (order three,
// black vertices), sigma1 = right action of S (order two, white vertices),
// sigma_inf = (sigma0 sigma1)^-1 = right action of T^-1 (faces are the cusp
// cycles).  Throws std::domain_error on a level-two-ambient table.
MonodromyTriple construction1_triple(const CosetTable& table);

// Triple of a level-two-ambient table: sigma_inf = right action of T^2,
// sigma0 = right action of S T^2 S^-1, sigma1 = (sigma_inf sigma0)^-1.
// Throws std::domain_error on a full-ambient table.
MonodromyTriple construction2_triple(const CosetTable& table);

// Passport of any valid triple: partitions are the cycle types, genus from
// the Euler formula g = (2 - (c_b + c_w + c_f - m)) / 2.
DessinPassport passport_from_triple(const MonodromyTriple& triple);

// Passports with counts; the Euler genus is cross-checked internally against
// 1 + m/12 - nu2/4 - nu3/3 - nu_inf/2 (construction 1) and against
// 1 + (m/2)(1 - 1/k0 - 1/k1 - 1/kinf) for uniform dessins (construction 2).
DessinPassport passport_from_construction1(const CosetTable& table);
DessinPassport passport_from_construction2(const CosetTable& table);

struct DessinDiagnostics {
    bool transitive = false;
    bool uniform = false;
    bool regular = false;      // monodromy group order equals the degree
    bool center_trivial = false;
    long group_order = 0;
};

// Enumerates the generated permutation group by closure; refuses (throws
// std::runtime_error) if the order would exceed 10^6.  The center is the set
// of group elements commuting with sigma0 and sigma_inf.
DessinDiagnostics diagnostics(const MonodromyTriple& triple);

}  // namespace modcurve
