#include "modcurve/belyi/catalog.hpp"

namespace modcurve {

namespace {

using RF = RatFunc<QuadExt>;

RF zz() { return RF::var(); }
RF c(long v) { return RF(v); }

}  // namespace

RatMap j_map_level2() {
    RF z = zz();
    return RatMap((c(3) * z * z + c(1)).pow(3) / (c(9) * z * z - c(1)).pow(2));
}

RatMap j_map_level3() {
    RF u = zz().pow(3);
    return RatMap(u * (u + c(8)).pow(3) / (c(64) * (u - c(1)).pow(3)));
}

RatMap j_map_level4() {
    RF z = zz();
    RF u = z.pow(4);
    return RatMap((u * u + c(14) * u + c(1)).pow(3) / (c(108) * u * (u - c(1)).pow(4)));
}

RatMap j_map_level6_x() {
    RF z = zz();
    RF u = z.pow(3);
    RF a = (u - c(4)) * ((u - c(4)).pow(3) - c(216) * z.pow(6));
    RF b = c(12) * z.pow(2) * (u - c(1)) * (u + c(8)).pow(2);
    return RatMap(-(a / b).pow(3));
}

RatMap level4_to_level2() {
    RF z = zz();
    return RatMap(-(z * z - c(1)).pow(2) / (c(4) * z * z));
}

RatMap level6_to_level3_x() {
    RF z = zz();
    return RatMap((c(4) - z.pow(3)) / (c(3) * z * z));
}

RatMap level2_chart_change() {
    RF z = zz();
    return RatMap((z + c(1)) / (c(3) * (z - c(1))));
}

RatMap level2_to_gamma0_2() {
    RF z = zz();
    RF third = c(1) / c(3);
    return RatMap(((z + c(1)) / (z - third)).pow(2));
}

RatMap j_map_gamma0_2() {
    RF z = zz();
    return RatMap((z + c(3)).pow(3) / (c(27) * (z - c(1)).pow(2)));
}

RatMap j_map_gamma0_3() {
    RF z = zz();
    return RatMap(z * (z + c(8)).pow(3) / (c(64) * (z - c(1)).pow(3)));
}

RatMap j_map_gamma0_6() {
    RF z = zz();
    RF cubic = z.pow(3) - c(228) * z * z + c(48) * z - c(64);
    return RatMap(-(z - c(4)).pow(3) * cubic.pow(3) /
                  (c(1728) * z * z * (z - c(1)).pow(3) * (z + c(8)).pow(6)));
}

RatMap scaled_j_map_gamma0_2() {
    RF z = zz();
    return RatMap((c(4) * z - c(3)).pow(3) / (c(27) * (z - c(1))));
}

RatMap scaled_j_map_gamma0_3() {
    RF z = zz();
    return RatMap(z * (c(9) * z - c(8)).pow(3) / (c(64) * (z - c(1))));
}

}  // namespace modcurve
