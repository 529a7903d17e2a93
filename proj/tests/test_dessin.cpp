#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "modcurve/dessin/dot.hpp"
#include "modcurve/dessin/passport.hpp"
#include "modcurve/psl2/coset.hpp"
#include "modcurve/psl2/cusp.hpp"
#include "modcurve/psl2/subgroup.hpp"

using namespace modcurve;

namespace {

CosetTable full_table(const SubgroupSpec& spec) { return CosetTable(spec, Ambient::Gamma1); }
CosetTable level2_table(const SubgroupSpec& spec) { return CosetTable(spec, Ambient::Gamma2); }

std::vector<long> parts(std::initializer_list<long> v) { return std::vector<long>(v); }

// Random permutation of {0..n-1} from a seeded engine.
Perm random_perm(std::mt19937_64& rng, long n) {
    std::vector<long> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

MonodromyTriple conjugated(const MonodromyTriple& tr, const Perm& p) {
    Perm pi = p.inverse();
    return MonodromyTriple{p * tr.sigma0 * pi, p * tr.sigma1 * pi, p * tr.sigma_inf * pi};
}

// Count node and edge lines of a DOT rendering, and collect the edge lines.
struct DotStats {
    long black = 0;
    long white = 0;
    std::vector<std::string> edges;
};

DotStats dot_stats(const std::string& dot) {
    DotStats st;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("--") != std::string::npos)
            st.edges.push_back(line);
        else if (line.find("fillcolor=black") != std::string::npos)
            ++st.black;
        else if (line.find("fillcolor=white") != std::string::npos)
            ++st.white;
    }
    return st;
}

}  // namespace

TEST_CASE("triple validity requires identity product and transitivity") {
    MonodromyTriple good;
    good.sigma0 = Perm::parse_cycles("(1 2 3)", 3);
    good.sigma1 = Perm::parse_cycles("(1 2)", 3);
    good.sigma_inf = (good.sigma0 * good.sigma1).inverse();
    CHECK(good.valid());
    CHECK((good.sigma0 * good.sigma1 * good.sigma_inf).is_identity());

    MonodromyTriple bad_product = good;
    bad_product.sigma_inf = Perm(3);
    CHECK_FALSE(bad_product.valid());
    CHECK_THROWS_AS(bad_product.validate(), std::domain_error);

    // Identity product but two orbits {1,2} and {3,4}.
    MonodromyTriple intransitive;
    intransitive.sigma0 = Perm::parse_cycles("(1 2)(3 4)", 4);
    intransitive.sigma1 = Perm::parse_cycles("(1 2)(3 4)", 4);
    intransitive.sigma_inf = Perm(4);
    CHECK((intransitive.sigma0 * intransitive.sigma1 * intransitive.sigma_inf).is_identity());
    CHECK_FALSE(intransitive.valid());

    MonodromyTriple mismatched;
    mismatched.sigma0 = Perm(3);
    mismatched.sigma1 = Perm(4);
    mismatched.sigma_inf = Perm(4);
    CHECK_THROWS_AS(mismatched.validate(), std::domain_error);
}

TEST_CASE("full-ambient passports: level two and the index-three subgroup") {
    auto p2 = passport_from_construction1(full_table(PrincipalCongruence{2}));
    CHECK(p2.m == 6);
    CHECK(p2.genus == 0);
    CHECK(p2.black == parts({3, 3}));
    CHECK(p2.white == parts({2, 2, 2}));
    CHECK(p2.faces == parts({2, 2, 2}));
    CHECK(p2.has_counts);
    CHECK(p2.nu2 == 0);
    CHECK(p2.nu3 == 0);
    CHECK(p2.nu_inf == 3);
    CHECK(p2.text() == "m=6; g=0; black=[3,3]; white=[2,2,2]; faces=[2,2,2]");

    auto p02 = passport_from_construction1(full_table(GammaZero{2}));
    CHECK(p02.m == 3);
    CHECK(p02.genus == 0);
    CHECK(p02.black == parts({3}));
    CHECK(p02.white == parts({2, 1}));
    CHECK(p02.faces == parts({2, 1}));
    CHECK(p02.nu2 == 1);
    CHECK(p02.nu3 == 0);
    CHECK(p02.nu_inf == 2);

    auto p03 = passport_from_construction1(full_table(GammaZero{3}));
    CHECK(p03.m == 4);
    CHECK(p03.nu3 == 1);
    CHECK(p03.nu2 == 0);
    CHECK(p03.black == parts({3, 1}));
    CHECK(p03.faces == parts({3, 1}));

    // Passing a level-two-ambient table to construction 1 is refused.
    CHECK_THROWS_AS(construction1_triple(level2_table(PrincipalCongruence{4})),
                    std::domain_error);
    CHECK_THROWS_AS(construction2_triple(full_table(PrincipalCongruence{2})), std::domain_error);
}

TEST_CASE("full-ambient passports: index twelve subgroups") {
    auto p06 = passport_from_construction1(full_table(GammaZero{6}));
    CHECK(p06.m == 12);
    CHECK(p06.nu2 == 0);
    CHECK(p06.nu3 == 0);
    CHECK(p06.black == parts({3, 3, 3, 3}));   // four trivalent black vertices
    CHECK(p06.white == parts({2, 2, 2, 2, 2, 2}));  // six white vertices of degree two
    CHECK(p06.genus == 0);

    auto p011 = passport_from_construction1(full_table(GammaZero{11}));
    CHECK(p011.m == 12);
    CHECK(p011.genus == 1);
    CHECK(p011.black == parts({3, 3, 3, 3}));
    CHECK(p011.white == parts({2, 2, 2, 2, 2, 2}));
    CHECK(p011.faces == parts({11, 1}));
    CHECK(p011.text() ==
          "m=12; g=1; black=[3,3,3,3]; white=[2,2,2,2,2,2]; faces=[11,1]");
}

TEST_CASE("level-two-ambient passports: principal congruence levels four and eight") {
    auto t4 = construction2_triple(level2_table(PrincipalCongruence{4}));
    auto p4 = passport_from_construction2(level2_table(PrincipalCongruence{4}));
    CHECK(p4.m == 4);
    CHECK(p4.genus == 0);
    CHECK(p4.black == parts({2, 2}));
    CHECK(p4.white == parts({2, 2}));
    CHECK(p4.faces == parts({2, 2}));

    auto d4 = diagnostics(t4);
    CHECK(d4.transitive);
    CHECK(d4.uniform);
    CHECK(d4.regular);
    CHECK(d4.group_order == 4);
    // The order-four group generated here is abelian, so its center is not
    // trivial.
    CHECK_FALSE(d4.center_trivial);

    auto p8 = passport_from_construction2(level2_table(PrincipalCongruence{8}));
    CHECK(p8.m == 32);
    CHECK(p8.genus == 5);
    CHECK(p8.black == std::vector<long>(8, 4));
    CHECK(p8.white == std::vector<long>(8, 4));
    CHECK(p8.faces == std::vector<long>(8, 4));
    auto d8 = diagnostics(construction2_triple(level2_table(PrincipalCongruence{8})));
    CHECK(d8.regular);
    CHECK(d8.group_order == 32);
}

TEST_CASE("degree-six alternating images complete to the published triple") {
    Perm a = Perm::parse_cycles("(1 2 3)", 6);
    Perm b = Perm::parse_cycles("(2 3 4 5 6)", 6);
    MonodromyTriple tr;
    tr.sigma_inf = a;
    tr.sigma0 = b;
    tr.sigma1 = (tr.sigma_inf * tr.sigma0).inverse();
    tr.validate();
    CHECK(tr.sigma1 == Perm::parse_cycles("(1 2)(6 5 4 3)", 6));
    auto p = passport_from_triple(tr);
    CHECK(p.m == 6);
    CHECK(p.black == parts({5, 1}));
    CHECK(p.white == parts({4, 2}));
    CHECK(p.faces == parts({3, 1, 1, 1}));
    CHECK(p.genus == 0);
}

TEST_CASE("regular dessin of the alternating kernel of degree 360") {
    auto spec = parse_subgroup_spec("kernel:sigmaA=(1 2 3);sigmaB=(2 3 4 5 6)");
    auto table = level2_table(spec);
    auto tr = construction2_triple(table);
    auto p = passport_from_construction2(table);
    CHECK(p.m == 360);
    CHECK(p.genus == 40);
    CHECK(p.black == std::vector<long>(72, 5));
    CHECK(p.white == std::vector<long>(90, 4));
    CHECK(p.faces == std::vector<long>(120, 3));

    auto d = diagnostics(tr);
    CHECK(d.transitive);
    CHECK(d.uniform);
    CHECK(d.regular);
    CHECK(d.group_order == 360);
    CHECK(d.center_trivial);
}

TEST_CASE("one-point dessin") {
    MonodromyTriple tr{Perm(1), Perm(1), Perm(1)};
    CHECK(tr.valid());
    auto p = passport_from_triple(tr);
    CHECK(p.m == 1);
    CHECK(p.genus == 0);
    CHECK(p.text() == "m=1; g=0; black=[1]; white=[1]; faces=[1]");
    auto d = diagnostics(tr);
    CHECK(d.uniform);
    CHECK(d.regular);
    CHECK(d.group_order == 1);
    CHECK(d.center_trivial);

    auto st = dot_stats(export_dot(tr));
    CHECK(st.black == 1);
    CHECK(st.white == 1);
    CHECK(st.edges == std::vector<std::string>{"  b1 -- w1;"});
}

TEST_CASE("full-ambient genus routes agree for small levels") {
    // passport_from_construction1 throws std::logic_error if the Euler genus
    // disagrees with 1 + m/12 - nu2/4 - nu3/3 - nu_inf/2; exercise both
    // families through level twelve and tie the face data to the cusp module.
    for (long n = 1; n <= 12; ++n) {
        for (SubgroupSpec spec :
             {SubgroupSpec(PrincipalCongruence{n}), SubgroupSpec(GammaZero{n})}) {
            auto table = full_table(spec);
            auto p = passport_from_construction1(table);
            auto inv = subgroup_invariants(table);
            CHECK(p.m == inv.index);
            CHECK(p.genus == inv.genus);
            CHECK(p.nu2 == inv.nu2);
            CHECK(p.nu3 == inv.nu3);
            CHECK(p.nu_inf == static_cast<long>(inv.cusps.size()));
            std::vector<long> widths;
            for (const auto& c : inv.cusps) widths.push_back(c.width);
            std::sort(widths.rbegin(), widths.rend());
            CHECK(p.faces == widths);
        }
    }
}

TEST_CASE("level-two dessin genus follows the uniform formula") {
    // For the principal congruence group of level 2N inside the level-two
    // group, every cycle has length N and g = 1 + (m/2)(1 - 3/N).
    std::vector<std::pair<long, long>> expected{{2, 0}, {3, 1}, {4, 5}, {5, 13}};
    for (auto [n, genus] : expected) {
        auto p = passport_from_construction2(level2_table(PrincipalCongruence{2 * n}));
        CHECK(p.genus == genus);
        for (const auto* part : {&p.black, &p.white, &p.faces})
            for (long v : *part) CHECK(v == n);
        // 2N g = 2N + m(N - 3) rearranges the formula above over the integers.
        CHECK(2 * n * p.genus == 2 * n + p.m * (n - 3));
    }
}

TEST_CASE("normal subgroups give regular dessins, non-normal ones do not") {
    for (long n = 2; n <= 7; ++n) {
        auto d = diagnostics(construction1_triple(full_table(PrincipalCongruence{n})));
        CHECK(d.regular);
        CHECK(d.group_order == index_principal(n));
    }
    for (long n : {2L, 3L, 6L, 11L}) {
        auto d = diagnostics(construction1_triple(full_table(GammaZero{n})));
        CHECK_FALSE(d.regular);
        CHECK(d.group_order > index_gamma_zero(n));
    }
}

TEST_CASE("passports are invariant under relabeling the points") {
    // Conjugating all three permutations by any relabeling permutation leaves
    // the passport unchanged: 54 randomized instances over three dessins.
    std::mt19937_64 rng(91203);
    std::vector<MonodromyTriple> base{
        construction1_triple(full_table(GammaZero{11})),
        construction2_triple(level2_table(PrincipalCongruence{4})),
        construction1_triple(full_table(PrincipalCongruence{3})),
    };
    for (const auto& tr : base) {
        auto reference = passport_from_triple(tr);
        for (int iter = 0; iter < 18; ++iter) {
            Perm p = random_perm(rng, tr.degree());
            MonodromyTriple moved = conjugated(tr, p);
            CHECK(moved.valid());
            CHECK(passport_from_triple(moved) == reference);
        }
    }
}

TEST_CASE("face cycles traverse twice their length in edge sides") {
    // Walking around a face alternates white and black vertices; composing
    // the two turns gives sigma_inf, so a length-k face cycle is a closed
    // walk of exactly 2k edge sides.
    for (const MonodromyTriple& tr : {construction1_triple(full_table(GammaZero{11})),
                                      construction2_triple(level2_table(PrincipalCongruence{8}))}) {
        Perm s0i = tr.sigma0.inverse();
        Perm s1i = tr.sigma1.inverse();
        for (const auto& cyc : tr.sigma_inf.cycles(true)) {
            long start = cyc.front();
            long sides = 0;
            long edge = start;
            do {
                edge = s0i.apply(edge);  // cross at the black end
                ++sides;
                edge = s1i.apply(edge);  // cross at the white end
                ++sides;
            } while (edge != start);
            CHECK(sides == 2 * static_cast<long>(cyc.size()));
        }
    }
}

TEST_CASE("DOT rendering of the complete bipartite level-two dessin") {
    auto dot = export_dot(construction1_triple(full_table(PrincipalCongruence{2})));
    auto st = dot_stats(dot);
    CHECK(st.black == 2);
    CHECK(st.white == 3);
    CHECK(st.edges.size() == 6);
    // Every black-white pair appears exactly once: the graph is K(2,3).
    std::map<std::string, long> mult;
    for (const auto& e : st.edges) ++mult[e];
    CHECK(mult.size() == 6);
    for (const auto& [edge, count] : mult) CHECK(count == 1);
    CHECK(dot.substr(0, 14) == "graph dessin {");
    CHECK(dot.back() == '\n');
}

TEST_CASE("DOT rendering shows the doubled edge of the index-twelve dessin") {
    auto st = dot_stats(export_dot(construction1_triple(full_table(GammaZero{11}))));
    CHECK(st.black == 4);
    CHECK(st.white == 6);
    CHECK(st.edges.size() == 12);
    std::map<std::string, long> mult;
    for (const auto& e : st.edges) ++mult[e];
    CHECK(mult.size() == 11);  // one black-white pair is joined by two edges
    long doubled = 0;
    for (const auto& [edge, count] : mult)
        if (count == 2) ++doubled;
    CHECK(doubled == 1);
}
