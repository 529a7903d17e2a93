#include "modcurve/psl2/cusp.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcurve {

Cusp::Cusp(Int pp, Int qq) : p(std::move(pp)), q(std::move(qq)) {
    if (p == 0 && q == 0) throw std::domain_error("cusp (0 : 0) is not a point");
    Int g = gcd(p, q);
    p /= g;
    q /= g;
    if (sgn(q) < 0 || (sgn(q) == 0 && sgn(p) < 0)) {
        p = -p;
        q = -q;
    }
}

std::string Cusp::text() const {
    if (q == 0) return "inf";
    if (q == 1) return p.get_str();
    return p.get_str() + "/" + q.get_str();
}

Cusp parse_cusp(const std::string& s) {
    if (s == "inf") return Cusp();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Cusp(Int(s), Int(1));
        return Cusp(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::domain_error("cannot parse cusp '" + s + "'");
    }
}

Mat gamma_for_cusp(const Cusp& c) {
    // gcd(p, q) = 1 = p*s + q*t, so [[p, -t], [q, s]] has determinant one and
    // sends infinity to p/q.
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.p.get_mpz_t(), c.q.get_mpz_t());
    return Mat(c.p, -t, c.q, s);
}

Cusp apply_mat(const Mat& g, const Cusp& c) {
    return Cusp(g.a * c.p + g.b * c.q, g.c * c.p + g.d * c.q);
}

long cusp_width(const SubgroupSpec& spec, const Cusp& c) {
    Mat g = gamma_for_cusp(c);
    Mat gi = g.inverse();
    Mat cur = g;
    for (long k = 1; k <= 10000; ++k) {
        cur = cur * mat_T();
        if (is_member(spec, PSL2(cur * gi))) return k;
    }
    throw std::domain_error("cusp width exceeds the iteration cap");
}

std::vector<CuspClass> cusp_classes(const CosetTable& table) {
    if (table.ambient() != Ambient::Gamma1)
        throw std::domain_error("cusp classes require a full-ambient coset table");
    std::vector<CuspClass> out;
    for (const auto& cyc : table.sigma_t().cycles(true)) {
        CuspClass cls;
        long least = *std::min_element(cyc.begin(), cyc.end());
        const Mat& rep = table.reps()[static_cast<size_t>(least)];
        cls.rep = Cusp(rep.a, rep.c);
        cls.width = static_cast<long>(cyc.size());
        cls.cosets = cyc;
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const CuspClass& x, const CuspClass& y) {
        return x.cosets.front() < y.cosets.front();
    });
    return out;
}

long classify_cusp(const CosetTable& table, const Cusp& c) {
    long i = table.locate(gamma_for_cusp(c));
    auto classes = cusp_classes(table);
    for (size_t k = 0; k < classes.size(); ++k)
        for (long x : classes[k].cosets)
            if (x == i) return static_cast<long>(k);
    throw std::logic_error("coset not covered by any cusp class");
}

bool cusps_equivalent(const CosetTable& table, const Cusp& a, const Cusp& b) {
    return classify_cusp(table, a) == classify_cusp(table, b);
}

namespace {

std::vector<std::vector<Cusp>> group_by_class(const std::vector<Cusp>& cusps,
                                              const std::vector<long>& cls) {
    std::vector<std::vector<Cusp>> out;
    std::vector<long> seen;  // class id of out[k]
    for (size_t i = 0; i < cusps.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), cls[i]);
        if (it == seen.end()) {
            seen.push_back(cls[i]);
            out.push_back({cusps[i]});
        } else {
            out[static_cast<size_t>(it - seen.begin())].push_back(cusps[i]);
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Cusp>> cusp_orbit_classify(const CosetTable& table,
                                                   const std::vector<Cusp>& cusps) {
    std::vector<long> cls;
    cls.reserve(cusps.size());
    for (const Cusp& c : cusps) cls.push_back(classify_cusp(table, c));
    return group_by_class(cusps, cls);
}

std::vector<std::vector<Cusp>> cusp_orbit_classify(const SubgroupSpec& spec,
                                                   const std::vector<Cusp>& cusps) {
    if (const auto* pc = std::get_if<PrincipalCongruence>(&spec); pc && pc->N == 2) {
        std::vector<long> cls;
        cls.reserve(cusps.size());
        for (const Cusp& c : cusps) {
            Cusp r = gamma2_cusp_class(c);
            cls.push_back(r.is_infinity() ? 2 : to_long_checked(r.p, "class"));
        }
        return group_by_class(cusps, cls);
    }
    CosetTable table(spec, Ambient::Gamma1);
    return cusp_orbit_classify(table, cusps);
}

Cusp gamma2_cusp_class(const Cusp& c) {
    bool p_odd = mpz_odd_p(c.p.get_mpz_t()) != 0;
    bool q_odd = mpz_odd_p(c.q.get_mpz_t()) != 0;
    if (!p_odd) return Cusp(0, 1);  // numerator even, denominator odd
    if (q_odd) return Cusp(1, 1);   // both odd
    return Cusp();                  // numerator odd, denominator even
}

SubgroupInvariants subgroup_invariants(const CosetTable& table) {
    if (table.ambient() != Ambient::Gamma1)
        throw std::domain_error("invariants require a full-ambient coset table");
    SubgroupInvariants inv;
    inv.index = table.index();
    inv.nu2 = table.sigma_s().fixed_points();
    inv.nu3 = table.sigma_st().fixed_points();
    inv.cusps = cusp_classes(table);
    auto mk = [](long n, long d) {
        Rat r(n, d);
        r.canonicalize();
        return r;
    };
    Rat g = Rat(1) + mk(inv.index, 12) - mk(inv.nu2, 4) - mk(inv.nu3, 3) -
            mk(static_cast<long>(inv.cusps.size()), 2);
    if (g.get_den() != 1 || sgn(g.get_num()) < 0)
        throw std::logic_error("genus formula did not yield a nonnegative integer");
    inv.genus = to_long_checked(g.get_num(), "genus");
    return inv;
}

}  // namespace modcurve
