#include "modcurve/dessin/passport.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "modcurve/arith/rational.hpp"

namespace modcurve {

namespace {

std::string partition_text(const std::vector<long>& parts) {
    std::string out = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += "]";
    return out;
}

long euler_genus(long m, long cb, long cw, long cf) {
    long chi = cb + cw + cf - m;  // V - E + F of the embedded bipartite graph
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw std::logic_error("Euler characteristic does not give a genus");
    return (2 - chi) / 2;
}

}  // namespace

bool MonodromyTriple::valid() const {
    try {
        validate();
    } catch (const std::domain_error&) {
        return false;
    }
    return true;
}

void MonodromyTriple::validate() const {
    if (sigma0.size() != sigma1.size() || sigma0.size() != sigma_inf.size())
        throw std::domain_error("monodromy triple: degree mismatch");
    if (degree() < 1) throw std::domain_error("monodromy triple: degree must be positive");
    if (!(sigma0 * sigma1 * sigma_inf).is_identity())
        throw std::domain_error("monodromy triple: product is not the identity");
    if (!permutations_transitive({sigma0, sigma1, sigma_inf}, degree()))
        throw std::domain_error("monodromy triple: action is not transitive");
}

std::string DessinPassport::text() const {
    std::ostringstream out;
    out << "m=" << m << "; g=" << genus << "; black=" << partition_text(black)
        << "; white=" << partition_text(white) << "; faces=" << partition_text(faces);
    return out.str();
}

MonodromyTriple construction1_triple(const CosetTable& table) {
    if (table.ambient() != Ambient::Gamma1)
        throw std::domain_error("construction 1 needs a full-ambient coset table");
    MonodromyTriple tr;
    tr.sigma0 = table.sigma_st();                    // order three: black vertices
    tr.sigma1 = table.sigma_s();                     // order two: white vertices
    tr.sigma_inf = (tr.sigma0 * tr.sigma1).inverse();  // equals sigma_T^-1
    tr.validate();
    return tr;
}

MonodromyTriple construction2_triple(const CosetTable& table) {
    if (table.ambient() != Ambient::Gamma2)
        throw std::domain_error("construction 2 needs a level-two-ambient coset table");
    MonodromyTriple tr;
    tr.sigma_inf = table.sigma_a();                    // action of T^2
    tr.sigma0 = table.sigma_b();                       // action of S T^2 S^-1
    tr.sigma1 = (tr.sigma_inf * tr.sigma0).inverse();
    tr.validate();
    return tr;
}

DessinPassport passport_from_triple(const MonodromyTriple& triple) {
    triple.validate();
    DessinPassport p;
    p.m = triple.degree();
    p.black = triple.sigma0.cycle_type();
    p.white = triple.sigma1.cycle_type();
    p.faces = triple.sigma_inf.cycle_type();
    p.genus = euler_genus(p.m, static_cast<long>(p.black.size()),
                          static_cast<long>(p.white.size()), static_cast<long>(p.faces.size()));
    return p;
}

DessinPassport passport_from_construction1(const CosetTable& table) {
    MonodromyTriple tr = construction1_triple(table);
    DessinPassport p = passport_from_triple(tr);
    p.has_counts = true;
    p.nu3 = tr.sigma0.fixed_points();
    p.nu2 = tr.sigma1.fixed_points();
    p.nu_inf = static_cast<long>(p.faces.size());
    // Independent genus route: g = 1 + m/12 - nu2/4 - nu3/3 - nu_inf/2.
    if (12 * p.genus != 12 + p.m - 3 * p.nu2 - 4 * p.nu3 - 6 * p.nu_inf)
        throw std::logic_error("genus cross-check failed for the full-ambient dessin");
    return p;
}

DessinPassport passport_from_construction2(const CosetTable& table) {
    MonodromyTriple tr = construction2_triple(table);
    DessinPassport p = passport_from_triple(tr);
    bool uniform = true;
    for (const auto* part : {&p.black, &p.white, &p.faces})
        for (long v : *part)
            if (v != part->front()) uniform = false;
    if (uniform && p.m > 0) {
        // For equal part sizes k0, k1, kinf the Euler genus must agree with
        // 1 + (m/2)(1 - 1/k0 - 1/k1 - 1/kinf).
        Int k0 = p.black.front(), k1 = p.white.front(), kinf = p.faces.front();
        Int lhs = Int(2) * k0 * k1 * kinf * Int(p.genus);
        Int rhs = Int(2) * k0 * k1 * kinf +
                  Int(p.m) * (k0 * k1 * kinf - k1 * kinf - k0 * kinf - k0 * k1);
        if (lhs != rhs)
            throw std::logic_error("genus cross-check failed for the uniform dessin");
    }
    return p;
}

DessinDiagnostics diagnostics(const MonodromyTriple& triple) {
    triple.validate();
    DessinDiagnostics d;
    d.transitive = true;  // validate() already requires transitivity

    d.uniform = true;
    for (const Perm* s : {&triple.sigma0, &triple.sigma1, &triple.sigma_inf}) {
        auto parts = s->cycle_type();
        for (long v : parts)
            if (v != parts.front()) d.uniform = false;
    }

    constexpr long kOrderGuard = 1000000;
    std::vector<Perm> gens{triple.sigma0, triple.sigma1, triple.sigma_inf};
    std::set<Perm> group;
    std::vector<Perm> frontier{Perm(triple.degree())};
    group.insert(frontier.front());
    while (!frontier.empty()) {
        Perm g = frontier.back();
        frontier.pop_back();
        for (const Perm& s : gens) {
            Perm h = s * g;
            if (group.insert(h).second) {
                if (static_cast<long>(group.size()) > kOrderGuard)
                    throw std::runtime_error("monodromy group order exceeds 10^6");
                frontier.push_back(std::move(h));
            }
        }
    }
    d.group_order = static_cast<long>(group.size());
    d.regular = (d.group_order == triple.degree());

    d.center_trivial = true;
    for (const Perm& g : group) {
        if (g.is_identity()) continue;
        if (g * triple.sigma0 == triple.sigma0 * g && g * triple.sigma_inf == triple.sigma_inf * g) {
            d.center_trivial = false;
            break;
        }
    }
    return d;
}

}  // namespace modcurve
