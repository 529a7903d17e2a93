#include "modcurve/belyi/ratmap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modcurve/arith/squarefree.hpp"

namespace modcurve {

namespace {

long common_disc(const RatFunc<QuadExt>& f) {
    long d = 0;
    auto visit = [&d](const Poly<QuadExt>& p) {
        for (const QuadExt& c : p.coeffs()) {
            if (c.is_rational()) continue;
            if (d == 0) {
                d = c.d();
            } else if (d != c.d()) {
                throw std::domain_error("coefficients from different quadratic fields");
            }
        }
    };
    visit(f.num());
    visit(f.den());
    return d;
}

// Multiplicities of the roots of p (over the algebraic closure) plus, when
// drop > 0, one extra fiber point of multiplicity drop contributed by the
// domain's point at infinity.  Descending.
std::vector<long> fiber_partition(const Poly<QuadExt>& p, long drop) {
    std::vector<long> parts;
    if (p.degree() >= 1) {
        auto dec = squarefree_factor(p);
        for (const auto& part : dec.parts)
            for (long k = 0; k < part.factor.degree(); ++k) parts.push_back(part.multiplicity);
    }
    if (drop > 0) parts.push_back(drop);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::string partition_text(const std::vector<long>& parts) {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += ")";
    return out;
}

}  // namespace

RatMap::RatMap(RatFunc<QuadExt> f) : f_(std::move(f)) {
    degree_ = f_.map_degree();
    if (degree_ < 1) throw std::domain_error("map must be nonconstant");
    disc_ = common_disc(f_);
}

RatMap::RatMap(Poly<QuadExt> num, Poly<QuadExt> den)
    : RatMap(RatFunc<QuadExt>(std::move(num), std::move(den))) {}

std::string RamProfile::text() const {
    std::ostringstream out;
    out << "degree=" << degree << " over0=" << partition_text(over_zero)
        << " over1=" << partition_text(over_one) << " overinf=" << partition_text(over_inf);
    return out.str();
}

RamProfile ram_profile(const RatMap& f) {
    const long d = f.degree();
    const Poly<QuadExt>& num = f.func().num();
    const Poly<QuadExt>& den = f.func().den();
    Poly<QuadExt> num_minus_one = num - den;  // numerator of f - 1 (still coprime to den)

    RamProfile prof;
    prof.degree = d;
    prof.over_zero = fiber_partition(num, d - num.degree());
    prof.over_one = fiber_partition(num_minus_one, d - num_minus_one.degree());
    prof.over_inf = fiber_partition(den, d - den.degree());
    return prof;
}

bool is_belyi(const RatMap& f) {
    RamProfile prof = ram_profile(f);
    long total = 0;
    for (const auto* fiber : {&prof.over_zero, &prof.over_one, &prof.over_inf}) {
        // Skip fibers the domain's infinity misses entirely: when f(inf) is a
        // regular value outside {0,1,inf}, each partition still sums to the
        // degree, so the count below is correct as-is.
        total += prof.degree - static_cast<long>(fiber->size());
    }
    return total == 2 * prof.degree - 2;
}

bool verify_identity(const RatMap& lhs, const RatMap& rhs) {
    if (lhs.field_disc() != 0 && rhs.field_disc() != 0 && lhs.field_disc() != rhs.field_disc())
        throw std::domain_error("identity across different quadratic fields");
    return lhs.func() == rhs.func();
}

RatMap compose_maps(const RatMap& outer, const RatMap& inner) {
    if (outer.field_disc() != 0 && inner.field_disc() != 0 &&
        outer.field_disc() != inner.field_disc())
        throw std::domain_error("composition across different quadratic fields");
    return RatMap(outer.func().compose(inner.func()));
}

DessinPassport passport_of_map(const RatMap& f) {
    if (!is_belyi(f)) throw std::invalid_argument("map is not Belyi");
    RamProfile prof = ram_profile(f);
    DessinPassport p;
    p.m = prof.degree;
    p.genus = 0;  // Riemann-Hurwitz: the Belyi count above is the genus-0 case
    p.black = prof.over_zero;
    p.white = prof.over_one;
    p.faces = prof.over_inf;
    return p;
}

RatFunc<Rat> rational_func(const RatMap& f) {
    if (f.field_disc() != 0) throw std::domain_error("map has irrational coefficients");
    auto convert = [](const Poly<QuadExt>& p) {
        std::vector<Rat> v;
        v.reserve(static_cast<size_t>(p.degree() + 1));
        for (long i = 0; i <= p.degree(); ++i) v.push_back(p.coeff(i).a());
        return Poly<Rat>(std::move(v));
    };
    return RatFunc<Rat>(convert(f.func().num()), convert(f.func().den()));
}

}  // namespace modcurve
