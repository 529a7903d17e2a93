#pragma once

#include <string>
#include <vector>

#include "modcurve/arith/quadext.hpp"
#include "modcurve/arith/ratfunc.hpp"
#include "modcurve/dessin/passport.hpp"

namespace modcurve {

// Nonconstant rational self-map of the projective line with coefficients in
// the rationals or in one quadratic extension Q(sqrt(d)).  The underlying
// fraction is reduced with monic denominator; the map degree is cached.
class RatMap {
  public:
    explicit RatMap(RatFunc<QuadExt> f);
    RatMap(Poly<QuadExt> num, Poly<QuadExt> den);

    const RatFunc<QuadExt>& func() const { return f_; }
    long degree() const { return degree_; }
    // 0 when every coefficient is rational, else the radicand d.
    long field_disc() const { return disc_; }
    std::string text(const std::string& var = "z") const { return f_.text(var); }

    friend bool operator==(const RatMap& f, const RatMap& g) { return f.f_ == g.f_; }
    friend bool operator!=(const RatMap& f, const RatMap& g) { return !(f == g); }

  private:
    RatFunc<QuadExt> f_;
    long degree_ = 0;
    long disc_ = 0;
};

// Ramification data over the three distinguished values.  Fiber points of
// the domain, including its point at infinity, are listed by multiplicity;
// each partition sums to the degree.
struct RamProfile {
    long degree = 0;
    std::vector<long> over_zero;
    std::vector<long> over_one;
    std::vector<long> over_inf;

    friend bool operator==(const RamProfile& x, const RamProfile& y) {
        return x.degree == y.degree && x.over_zero == y.over_zero && x.over_one == y.over_one &&
               x.over_inf == y.over_inf;
    }
    friend bool operator!=(const RamProfile& x, const RamProfile& y) { return !(x == y); }

    std::string text() const;
};

// Exact fiber multiplicities from squarefree decomposition of the numerator
// (over 0), of numerator minus denominator (over 1) and of the denominator
// (over infinity), with degree-drop bookkeeping for the domain's infinity.
RamProfile ram_profile(const RatMap& f);

// True iff the Riemann-Hurwitz count (sum over the three fibers of
// degree - #points) equals 2*degree - 2, which forces all ramification to
// sit over {0, 1, infinity}.
bool is_belyi(const RatMap& f);

// Exact equality of reduced rational functions.  Throws std::domain_error
// when the two maps live in different quadratic fields.
bool verify_identity(const RatMap& lhs, const RatMap& rhs);

// outer(inner); degrees multiply.
RatMap compose_maps(const RatMap& outer, const RatMap& inner);

// The genus-0 passport whose partitions are the three fiber profiles.
// Throws std::invalid_argument when the map is not Belyi.
DessinPassport passport_of_map(const RatMap& f);

// View over Q; throws std::domain_error if a coefficient is irrational.
RatFunc<Rat> rational_func(const RatMap& f);

}  // namespace modcurve
