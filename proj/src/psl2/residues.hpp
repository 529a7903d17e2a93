#pragma once

#include <array>
#include <set>
#include <vector>

#include "modcurve/psl2/mat.hpp"

// Shared helpers for working with matrices in SL(2, Z/N), used by the coset,
// cusp and orbit translation units.

namespace modcurve::detail {

// Reduce mod N entrywise into [0, N).
inline std::array<long, 4> mod_entries(const Mat& m, long N) {
    Int n(N);
    return {to_long_checked(mod_floor(m.a, n), "mod"), to_long_checked(mod_floor(m.b, n), "mod"),
            to_long_checked(mod_floor(m.c, n), "mod"), to_long_checked(mod_floor(m.d, n), "mod")};
}

// Canonical projective residue: the smaller of M mod N and -M mod N.
inline std::array<long, 4> mod_canonical(const Mat& m, long N) {
    auto p = mod_entries(m, N);
    auto q = mod_entries(-m, N);
    return std::min(p, q);
}

// One matrix per projective upper-triangular class [[a, b], [0, a^-1]] in
// SL(2, Z/N); this is the image of the Hecke congruence group mod N.
inline std::vector<Mat> upper_triangular_classes(long N) {
    std::vector<Mat> out;
    std::set<std::array<long, 4>> seen;
    for (long a = 0; a < N; ++a) {
        long ainv = -1;
        for (long x = 0; x < N; ++x)
            if ((a * x) % N == 1 % N) ainv = x;
        if (ainv < 0) continue;
        for (long b = 0; b < N; ++b) {
            Mat m(a, b, 0, ainv);
            if (seen.insert(mod_canonical(m, N)).second) out.push_back(m);
        }
    }
    return out;
}

}  // namespace modcurve::detail
