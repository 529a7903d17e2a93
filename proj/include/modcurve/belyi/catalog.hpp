#pragma once

#include "modcurve/belyi/ratmap.hpp"

namespace modcurve {

// Stored Belyi maps and auxiliary quotients on the classical modular curves,
// all normalized so that the j-line target identifies j/1728 with the map's
// value (elliptic orbits over 0 and 1, cusps over infinity).

// X(2) -> X(1), degree 6: (3z^2+1)^3 / (9z^2-1)^2.
RatMap j_map_level2();
// X(3) -> X(1), degree 12: z^3 (z^3+8)^3 / (64 (z^3-1)^3).
RatMap j_map_level3();
// X(4) -> X(1), degree 24: (z^8+14z^4+1)^3 / (108 z^4 (z^4-1)^4).
RatMap j_map_level4();
// x-coordinate factor of the degree-72 map on X(6) (the curve y^2 = x^3 - 1),
// degree 36: -[(z^3-4)((z^3-4)^3-216 z^6)]^3 / (1728 z^6 (z^3-1)^3 (z^3+8)^6).
RatMap j_map_level6_x();

// X(4) -> X(2), degree 4: -(z^2-1)^2 / (4z^2).
RatMap level4_to_level2();
// x-coordinate factor of the trisection X(6) -> X(3), degree 3: (4-z^3)/(3z^2).
RatMap level6_to_level3_x();
// Mobius change of coordinate on X(2): z -> (z+1)/(3(z-1)).
RatMap level2_chart_change();
// Degree-2 quotient X(2) -> X_0(2): z -> ((z+1)/(z-1/3))^2.
RatMap level2_to_gamma0_2();

// X_0(2) -> X(1), degree 3: (z+3)^3 / (27 (z-1)^2).
RatMap j_map_gamma0_2();
// X_0(3) -> X(1), degree 4: z (z+8)^3 / (64 (z-1)^3).
RatMap j_map_gamma0_3();
// X_0(6) -> X(1), degree 12:
// -(z-4)^3 (z^3-228z^2+48z-64)^3 / (1728 z^2 (z-1)^3 (z+8)^6).
RatMap j_map_gamma0_6();

// z -> j(2z)/1728 on X_0(2), degree 3: (4z-3)^3 / (27 (z-1)).
RatMap scaled_j_map_gamma0_2();
// z -> j(3z)/1728 on X_0(3), degree 4: z (9z-8)^3 / (64 (z-1)).
RatMap scaled_j_map_gamma0_3();

}  // namespace modcurve
