#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "modcurve/arith/bivar.hpp"
#include "modcurve/arith/laurent.hpp"
#include "modcurve/arith/poly.hpp"
#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/ratfunc.hpp"
#include "modcurve/arith/rational.hpp"
#include "modcurve/arith/resultant.hpp"
#include "modcurve/arith/squarefree.hpp"
#include "support/sylvester.hpp"

using namespace modcurve;

namespace {

Poly<Rat> qpoly(std::vector<long> ascending) {
    std::vector<Rat> v;
    for (long c : ascending) v.push_back(Rat(c));
    return Poly<Rat>(v);
}

Rat mkrat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Poly<Int> zpoly(std::vector<long> ascending) {
    std::vector<Int> v;
    for (long c : ascending) v.push_back(Int(c));
    return Poly<Int>(v);
}

Poly<Int> random_zpoly(std::mt19937& rng, long maxdeg, bool nonconstant = false) {
    std::uniform_int_distribution<long> degd(nonconstant ? 1 : 0, maxdeg);
    std::uniform_int_distribution<long> coeffd(-9, 9);
    for (;;) {
        long d = degd(rng);
        std::vector<Int> v;
        for (long i = 0; i <= d; ++i) v.push_back(Int(coeffd(rng)));
        Poly<Int> p{std::move(v)};
        if (!p.is_zero() && (!nonconstant || p.degree() >= 1)) return p;
    }
}

}  // namespace

TEST_CASE("quadratic extension arithmetic") {
    QuadExt r3 = QuadExt::sqrt_of(3);
    QuadExt alpha = QuadExt(1) + r3;   // 1 + sqrt(3)
    QuadExt beta = QuadExt(1) - r3;    // 1 - sqrt(3)
    CHECK(alpha * beta == QuadExt(-2));

    QuadExt i = QuadExt::sqrt_of(-1);
    QuadExt x = QuadExt(1) + QuadExt(2) * i;
    CHECK(x.norm() == Rat(5));
    CHECK(x * x.inverse() == QuadExt(1));
    CHECK(x.conj() == QuadExt(1) - QuadExt(2) * i);

    // Rationals embed with d = 0 and combine with any field.
    QuadExt two(2);
    CHECK(two.is_rational());
    CHECK((two + r3).d() == 3);
    CHECK(QuadExt(3, Rat(5), Rat(0)).is_rational());  // b = 0 collapses the tag

    CHECK_THROWS_AS(r3 + QuadExt::sqrt_of(2), std::domain_error);
    CHECK_THROWS_AS(QuadExt(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(QuadExt::sqrt_of(12), std::domain_error);  // not squarefree
    CHECK_THROWS_AS(QuadExt::sqrt_of(1), std::domain_error);
    CHECK_THROWS_AS(QuadExt::sqrt_of(0), std::domain_error);

    CHECK(x.text() == "1+2*i");
    CHECK((QuadExt(18) + QuadExt(6) * r3).text() == "18+6*sqrt(3)");
    CHECK((-r3).text() == "-sqrt(3)");
    CHECK(QuadExt(Rat(-7, 2)).text() == "-7/2");
}

TEST_CASE("quadext norm is multiplicative (randomized)") {
    std::mt19937 rng(20260814u);
    std::uniform_int_distribution<long> cd(-20, 20);
    const long ds[] = {-3, -1, 2, 3};
    for (int k = 0; k < 100; ++k) {
        long d = ds[static_cast<size_t>(k) % 4];
        QuadExt x(d, mkrat(cd(rng), 1 + std::abs(cd(rng))), mkrat(cd(rng), 1 + std::abs(cd(rng))));
        QuadExt y(d, mkrat(cd(rng), 1 + std::abs(cd(rng))), mkrat(cd(rng), 1 + std::abs(cd(rng))));
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
    }
}

TEST_CASE("polynomial basics") {
    Poly<Rat> p = qpoly({1, 0, -2, 1});  // z^3 - 2z^2 + 1  (ascending: 1,0,-2,1)
    CHECK(p.degree() == 3);
    CHECK(p.text("z") == "z^3-2*z^2+1");
    CHECK(p.eval(Rat(2)) == Rat(1));
    CHECK(p.derivative().text("z") == "3*z^2-4*z");

    Poly<Rat> z = Poly<Rat>::var();
    CHECK((z * z - Poly<Rat>(Rat(1))).text("z") == "z^2-1");
    CHECK(Poly<Rat>().text("z") == "0");
    CHECK(Poly<Rat>().degree() == -1);

    auto [q, r] = poly_divmod(qpoly({-1, 0, 0, 0, 0, 1}), qpoly({-1, 1}));  // (z^5-1)/(z-1)
    CHECK(r.is_zero());
    CHECK(q == qpoly({1, 1, 1, 1, 1}));

    CHECK(gcd_monic(qpoly({-1, 0, 1}), qpoly({1, 1})) == qpoly({1, 1}));
    CHECK(gcd_monic(qpoly({0, 0}), qpoly({0})).is_zero());

    // Composition: (z+1)^2 via outer z^2.
    CHECK(qpoly({0, 0, 1}).compose(qpoly({1, 1})) == qpoly({1, 2, 1}));

    // Exact division over the integers.
    Poly<Int> a = zpoly({2, 4, 2});
    Poly<Int> b = zpoly({1, 1});
    CHECK(poly_divexact(a, b) == zpoly({2, 2}));
    CHECK_THROWS_AS(poly_divexact(zpoly({1, 1, 1}), zpoly({1, 1})), std::logic_error);
}

TEST_CASE("pseudo-remainder agrees with scaled field remainder") {
    std::mt19937 rng(777u);
    for (int k = 0; k < 50; ++k) {
        Poly<Int> a = random_zpoly(rng, 6);
        Poly<Int> b = random_zpoly(rng, 4, true);
        if (a.degree() < b.degree()) continue;
        // Lift to Q, compute lc(b)^(da-db+1) * (a mod b) and compare.
        std::vector<Rat> av, bv;
        for (long i = 0; i <= a.degree(); ++i) av.push_back(Rat(a.coeff(i)));
        for (long i = 0; i <= b.degree(); ++i) bv.push_back(Rat(b.coeff(i)));
        Poly<Rat> aq{av}, bq{bv};
        Poly<Rat> rq = poly_divmod(aq, bq).second;
        Rat scale = rat_pow(Rat(b.lc()), a.degree() - b.degree() + 1);
        Poly<Int> pr = pseudo_rem(a, b);
        Poly<Rat> want = rq * scale;
        std::vector<Rat> prv;
        for (long i = 0; i <= pr.degree(); ++i) prv.push_back(Rat(pr.coeff(i)));
        CHECK(Poly<Rat>{prv} == want);
    }
}

TEST_CASE("resultant sign convention and pinned values") {
    // Res_z(z - X, z - Y) = X - Y pins the global sign.
    Poly<BivarPoly> a{std::vector<BivarPoly>{-BivarPoly::X(), BivarPoly(1)}};
    Poly<BivarPoly> b{std::vector<BivarPoly>{-BivarPoly::Y(), BivarPoly(1)}};
    BivarPoly res = resultant(a, b);
    CHECK(res == BivarPoly::X() - BivarPoly::Y());
    CHECK(testsupport::sylvester_resultant(a, b) == res);

    // Res_z(z^2 - 2, z - 3) = 7.
    CHECK(resultant(zpoly({-2, 0, 1}), zpoly({-3, 1})) == Int(7));

    // Res_z(z^2 - X, (z-1)^2 - Y) = (X + 1 - Y)^2 - 4X, by expanding the
    // product of (root - 1)^2 - Y over the roots +-sqrt(X).
    Poly<BivarPoly> p2{std::vector<BivarPoly>{-BivarPoly::X(), BivarPoly(0), BivarPoly(1)}};
    Poly<BivarPoly> q2{
        std::vector<BivarPoly>{BivarPoly(1) - BivarPoly::Y(), BivarPoly(-2), BivarPoly(1)}};
    BivarPoly s = BivarPoly::X() + BivarPoly(1) - BivarPoly::Y();
    BivarPoly expect = s * s - BivarPoly(4) * BivarPoly::X();
    CHECK(resultant(p2, q2) == expect);
    CHECK(testsupport::sylvester_resultant(p2, q2) == expect);

    // Common root gives zero.
    CHECK(resultant(zpoly({-1, 0, 1}), zpoly({-1, 1})) == Int(0));

    // Two constants are rejected; a single constant exponentiates.
    CHECK_THROWS_AS(resultant(zpoly({3}), zpoly({5})), std::domain_error);
    CHECK(resultant(zpoly({3}), zpoly({0, 0, 1})) == Int(9));
    CHECK(resultant(zpoly({0, 0, 1}), zpoly({3})) == Int(9));
}

TEST_CASE("resultant agrees with sylvester determinant (randomized)") {
    std::mt19937 rng(424242u);
    int done = 0;
    while (done < 60) {
        Poly<Int> a = random_zpoly(rng, 5);
        Poly<Int> b = random_zpoly(rng, 5);
        if (a.degree() == 0 && b.degree() == 0) continue;
        CHECK(resultant(a, b) == testsupport::sylvester_resultant(a, b));
        ++done;
    }
}

TEST_CASE("resultant multiplicativity and swap symmetry (randomized)") {
    std::mt19937 rng(99991u);
    for (int k = 0; k < 50; ++k) {
        Poly<Int> p = random_zpoly(rng, 3, true);
        Poly<Int> r = random_zpoly(rng, 3, true);
        Poly<Int> q = random_zpoly(rng, 3, true);
        CHECK(resultant(p * r, q) == resultant(p, q) * resultant(r, q));
        Int lhs = resultant(p, q);
        Int rhs = resultant(q, p);
        if ((p.degree() * q.degree()) % 2) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("squarefree decomposition matches known factorizations") {
    // z^2 (z-1)^2 -> [(z,2), (z-1,2)], unit 1.
    Poly<Rat> p1 = qpoly({0, 0, 1}) * qpoly({1, -2, 1});
    auto d1 = squarefree_factor(p1);
    CHECK(d1.unit == Rat(1));
    REQUIRE(d1.parts.size() == 2);
    CHECK(d1.parts[0].factor == qpoly({0, 1}));
    CHECK(d1.parts[0].multiplicity == 2);
    CHECK(d1.parts[1].factor == qpoly({-1, 1}));
    CHECK(d1.parts[1].multiplicity == 2);

    // 27 z^2 (z^2-1)^2 -> unit 27, [(z,2), (z-1,2), (z+1,2)].
    Poly<Rat> p2 = Rat(27) * qpoly({0, 0, 1}) * (qpoly({-1, 0, 1}) * qpoly({-1, 0, 1}));
    auto d2 = squarefree_factor(p2);
    CHECK(d2.unit == Rat(27));
    REQUIRE(d2.parts.size() == 3);
    CHECK(d2.parts[0].factor == qpoly({0, 1}));
    CHECK(d2.parts[1].factor == qpoly({-1, 1}));
    CHECK(d2.parts[2].factor == qpoly({1, 1}));
    for (const auto& part : d2.parts) CHECK(part.multiplicity == 2);

    // z^3 - 1 is squarefree: stays whole (multiplicity-1 parts are not split).
    auto d3 = squarefree_factor(qpoly({-1, 0, 0, 1}));
    REQUIRE(d3.parts.size() == 1);
    CHECK(d3.parts[0].factor == qpoly({-1, 0, 0, 1}));
    CHECK(d3.parts[0].multiplicity == 1);

    // (3z^2+1)^3 = 27 (z^2 + 1/3)^3: non-rational roots stay together.
    Poly<Rat> f2num = qpoly({1, 0, 3}) * qpoly({1, 0, 3}) * qpoly({1, 0, 3});
    auto d4 = squarefree_factor(f2num);
    CHECK(d4.unit == Rat(27));
    REQUIRE(d4.parts.size() == 1);
    CHECK(d4.parts[0].multiplicity == 3);
    CHECK(d4.parts[0].factor == Poly<Rat>(std::vector<Rat>{Rat(1, 3), Rat(0), Rat(1)}));

    CHECK_THROWS_AS(squarefree_factor(Poly<Rat>()), std::domain_error);
}

TEST_CASE("squarefree decomposition reassembles (randomized)") {
    std::mt19937 rng(5150u);
    std::uniform_int_distribution<long> cd(-5, 5);
    std::uniform_int_distribution<long> md(1, 3);
    for (int k = 0; k < 50; ++k) {
        // Build products of small factors with random multiplicities.
        long u = cd(rng);
        Poly<Rat> p(Rat(u == 0 ? 2 : u));
        int nfac = 1 + (k % 3);
        for (int t = 0; t < nfac; ++t) {
            Poly<Rat> f = qpoly({cd(rng), 1 + std::abs(cd(rng))});
            long m = md(rng);
            for (long e = 0; e < m; ++e) p *= f;
        }
        auto dec = squarefree_factor(p);
        Poly<Rat> re(dec.unit);
        for (const auto& part : dec.parts)
            for (long e = 0; e < part.multiplicity; ++e) re *= part.factor;
        CHECK(re == p);
        for (const auto& part : dec.parts) {
            CHECK(part.factor.lc() == Rat(1));
            Poly<Rat> g = gcd_monic(part.factor, part.factor.derivative());
            CHECK(g.degree() == 0);
        }
    }
}

TEST_CASE("laurent palindromic reduction") {
    using L = Laurent<Rat>;
    // z + 1/z -> y.
    L zp(-1, {Rat(1), Rat(0), Rat(1)});
    CHECK(zp.palindromic_reduce() == qpoly({0, 1}));

    // z^3 + 1/z^3 -> y^3 - 3y.
    L z3(-3, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(z3.palindromic_reduce() == qpoly({0, -3, 0, 1}));

    // 4096(z^2 + 1/z^2) + 3136(z + 1/z) + 1536 -> 4096y^2 + 3136y - 6656.
    L big(-2, {Rat(4096), Rat(3136), Rat(1536), Rat(3136), Rat(4096)});
    CHECK(big.palindromic_reduce() == qpoly({-6656, 3136, 4096}));

    L bad(-1, {Rat(1), Rat(0), Rat(2)});
    CHECK_THROWS_AS(bad.palindromic_reduce(), std::domain_error);
    L alsobad(0, {Rat(1), Rat(1)});  // z term without 1/z term
    CHECK_THROWS_AS(alsobad.palindromic_reduce(), std::domain_error);
}

TEST_CASE("palindromic round-trip (randomized)") {
    std::mt19937 rng(31337u);
    std::uniform_int_distribution<long> cd(-50, 50);
    std::uniform_int_distribution<long> nd(0, 6);
    for (int k = 0; k < 60; ++k) {
        long n = nd(rng);
        std::vector<Rat> half;
        for (long e = 0; e <= n; ++e) half.push_back(Rat(cd(rng)));
        // Assemble sum c_e (z^e + z^-e) + c_0.
        std::vector<Rat> full(static_cast<size_t>(2 * n + 1), Rat(0));
        for (long e = 0; e <= n; ++e) {
            full[static_cast<size_t>(n + e)] += half[static_cast<size_t>(e)];
            full[static_cast<size_t>(n - e)] += half[static_cast<size_t>(e)];
        }
        Laurent<Rat> lp(-n, full);
        REQUIRE(lp.palindromic());
        Poly<Rat> reduced = lp.palindromic_reduce();
        CHECK(Laurent<Rat>::substitute_symmetric(reduced) == lp);
    }
}

TEST_CASE("rational functions normalize and compose") {
    using RF = RatFunc<Rat>;
    RF f(qpoly({0, 0, 6}), qpoly({0, 2}));  // 6z^2 / 2z = 3z... with monic den
    CHECK(f.num() == qpoly({0, 3}));
    CHECK(f.den() == qpoly({1}));

    // Denominator made monic.
    RF g(qpoly({1}), qpoly({2, 2}));
    CHECK(g.den() == qpoly({1, 1}));
    CHECK(g.num() == Poly<Rat>(std::vector<Rat>{Rat(1, 2)}));

    CHECK_THROWS_AS(RF(qpoly({1}), Poly<Rat>()), std::domain_error);

    // (z^2) o (z+1) = (z+1)^2.
    RF outer(qpoly({0, 0, 1}), qpoly({1}));
    RF inner(qpoly({1, 1}), qpoly({1}));
    CHECK(outer.compose(inner) == RF(qpoly({1, 2, 1}), qpoly({1})));
    CHECK_THROWS_AS(outer.compose(RF(qpoly({5}), qpoly({1}))), std::domain_error);

    // Field behavior.
    RF z = RF::var();
    RF h = (z + RF(1)) / (z - RF(1));
    CHECK(h * (z - RF(1)) == z + RF(1));
    CHECK(h.pow(2) == h * h);
    CHECK(h.pow(-1) == (z - RF(1)) / (z + RF(1)));
    CHECK(h.eval(Rat(3)).value() == Rat(2));
    CHECK(!h.eval(Rat(1)).has_value());
    auto [inf_at_inf, val] = h.value_at_infinity();
    CHECK(!inf_at_inf);
    CHECK(val == Rat(1));

    CHECK(h.text("z") == "(z+1)/(z-1)");
    CHECK((z * RF(3)).text("z") == "3*z");

    // Degree of a P1 map; normalization is idempotent.
    RF f2(qpoly({1, 0, 9, 0, 27, 0, 27}), qpoly({1, 0, -18, 0, 81}));
    CHECK(f2.map_degree() == 6);
    CHECK(f2.den().lc() == Rat(1));
    CHECK(RF(f2.num(), f2.den()) == f2);
    CHECK(f2 == RF(qpoly({1, 0, 9, 0, 27, 0, 27}), qpoly({1, 0, -18, 0, 81})));
}

TEST_CASE("ratfunc composition matches displayed sextic-to-octic example") {
    using RF = RatFunc<Rat>;
    // f2 = (3z^2+1)^3 / (9z^2-1)^2.
    RF f2(qpoly({1, 0, 3}) * qpoly({1, 0, 3}) * qpoly({1, 0, 3}),
          qpoly({-1, 0, 9}) * qpoly({-1, 0, 9}));
    // Moebius m = (z+1)/(3(z-1)), quartic q = -(z^2-1)^2/(4 z^2).
    RF m(qpoly({1, 1}), qpoly({-3, 3}));
    RF q(-(qpoly({-1, 0, 1}) * qpoly({-1, 0, 1})), qpoly({0, 0, 4}));
    RF inner = m.compose(q);
    RF total = f2.compose(inner);
    // Expected: (z^8 + 14 z^4 + 1)^3 / (108 z^4 (z^4-1)^4).
    Poly<Rat> num = qpoly({1, 0, 0, 0, 14, 0, 0, 0, 1});
    num = num * num * num;
    Poly<Rat> den = qpoly({0, 0, 0, 0, 108});
    Poly<Rat> z4m1 = qpoly({-1, 0, 0, 0, 1});
    for (int t = 0; t < 4; ++t) den = den * z4m1;
    CHECK(total == RF(num, den));
    CHECK(total.map_degree() == 24);
}

TEST_CASE("bivariate polynomials") {
    BivarPoly X = BivarPoly::X(), Y = BivarPoly::Y();
    BivarPoly p = X * X * X + Y * Y * Y - X * X * Y * Y + BivarPoly(1488) * X * X * Y;
    CHECK(p.degree_x() == 3);
    CHECK(p.degree_y() == 3);
    CHECK(p.coeff(2, 2) == Int(-1));
    CHECK(!p.symmetric());
    CHECK((p + p.swap_xy()).symmetric());

    // Canonical display order grades by max(i, j) descending, then i, then j.
    CHECK(p.text() == "X^3+Y^3-X^2*Y^2+1488*X^2*Y");

    BivarPoly q = (X + Y) * (X - Y);
    CHECK(q == X * X - Y * Y);
    CHECK(q.eval(Rat(3), Rat(2)) == Rat(5));

    BivarPoly prod = p * q;
    CHECK(BivarPoly::divexact(prod, q) == p);
    CHECK_THROWS_AS(BivarPoly::divexact(p + BivarPoly(1), q), std::logic_error);

    CHECK((BivarPoly(6) * X + BivarPoly(9) * Y).content() == Int(3));
    CHECK(BivarPoly().text() == "0");
}

TEST_CASE("bivariate exact division (randomized)") {
    std::mt19937 rng(2024u);
    std::uniform_int_distribution<long> cd(-9, 9);
    std::uniform_int_distribution<long> ed(0, 3);
    auto rnd = [&]() {
        BivarPoly p;
        for (int t = 0; t < 4; ++t) p += BivarPoly::monomial(ed(rng), ed(rng), Int(cd(rng)));
        return p;
    };
    int done = 0;
    while (done < 50) {
        BivarPoly a = rnd(), b = rnd();
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(BivarPoly::divexact(a * b, b) == a);
        ++done;
    }
}
