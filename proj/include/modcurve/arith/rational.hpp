#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace modcurve {

// Exact arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return rat_pow(Rat(1) / base, -e);
    }
    Rat r(int_pow(base.get_num(), static_cast<unsigned long>(e)),
          int_pow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

// Floor-division remainder in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long to_long_checked(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::domain_error(std::string(what) + ": value out of range");
    return v.get_si();
}

}  // namespace modcurve
