#include "modcurve/modeq/jvalues.hpp"

#include <stdexcept>

#include "modcurve/belyi/catalog.hpp"

namespace modcurve {

std::vector<RegisteredPoint> registered_points(long level) {
    if (level == 2) {
        // Points for f(z) = (z+3)^3 / (27(z-1)^2).  z = 0 is the unramified
        // preimage of 1 (the elliptic point of the covering); z = 3/4 and
        // z = 9/8 are where the companion map (4z-3)^3 / (27(z-1)) takes the
        // values 0 and 1, i.e. where the 2-isogenous curve has j = 0 or
        // 1728; z = 2 is the fixed point of the involution z -> z/(z-1).
        return {
            {"j(i)", QuadExt(0), "12^3"},
            {"j(sqrt(3)*i)", QuadExt(Rat(3) / Rat(4)), "16*15^3"},
            {"j(2*i)", QuadExt(Rat(9) / Rat(8)), "66^3"},
            {"j(sqrt(2)*i)", QuadExt(2), "20^3"},
        };
    }
    if (level == 3) {
        // Points for f(z) = z(z+8)^3 / (64(z-1)^3).  z = 8/9 and the two
        // conjugate roots of 27z^2 - 36z + 8 are where the companion map
        // z(9z-8)^3 / (64(z-1)) takes the values 0 and 1, i.e. where the
        // 3-isogenous curve has j = 0 or 1728; z = 2 is the fixed point of
        // the involution z -> z/(z-1).
        return {
            {"j((1+3*sqrt(3)*i)/2)", QuadExt(Rat(8) / Rat(9)), "-3*160^3"},
            {"j((1+3*i)/2)", QuadExt(3, Rat(2) / Rat(3), Rat(-2) / Rat(9)),
             "(18-6*sqrt(3))*(82-54*sqrt(3))^3"},
            {"j(3*i)", QuadExt(3, Rat(2) / Rat(3), Rat(2) / Rat(9)),
             "(18+6*sqrt(3))*(82+54*sqrt(3))^3"},
            {"j(sqrt(3)*i)", QuadExt(2), "2*30^3"},
        };
    }
    throw std::domain_error("level must be 2 or 3");
}

std::string SpecialValue::text() const {
    if (!ok) return label + " = pole";
    std::string out = label + " = " + value.text();
    if (!factored.empty()) out += " = " + factored;
    return out;
}

std::vector<SpecialValue> special_values(const RatMap& f,
                                         const std::vector<RegisteredPoint>& points) {
    std::vector<SpecialValue> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        SpecialValue sv;
        sv.label = pt.label;
        sv.point = pt.point;
        sv.factored = pt.factored;
        auto v = f.func().eval(pt.point);
        if (v) {
            sv.ok = true;
            sv.value = QuadExt(1728) * *v;
        }
        out.push_back(std::move(sv));
    }
    return out;
}

std::vector<SpecialValue> special_values_level(long level) {
    RatMap f = level == 2   ? j_map_gamma0_2()
               : level == 3 ? j_map_gamma0_3()
                            : throw std::domain_error("level must be 2 or 3");
    return special_values(f, registered_points(level));
}

}  // namespace modcurve
