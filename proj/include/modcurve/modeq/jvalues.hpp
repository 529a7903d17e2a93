#pragma once

#include <string>
#include <vector>

#include "modcurve/arith/quadext.hpp"
#include "modcurve/belyi/ratmap.hpp"

namespace modcurve {

// A named evaluation point for a scaled j-map, together with the expected
// factored form of the resulting value (empty when none is registered).
struct RegisteredPoint {
    std::string label;
    QuadExt point;
    std::string factored;
};

// Evaluation points at which the degree-3 (level 2) or degree-4 (level 3)
// j-map takes a classical CM value: elliptic points of the covering and
// fixed points of the involution z -> z/(z-1).
// error: std::domain_error for levels other than 2 and 3.
std::vector<RegisteredPoint> registered_points(long level);

// One exact special value 1728*f(point); ok == false marks a pole of f.
struct SpecialValue {
    std::string label;
    QuadExt point;
    bool ok = false;
    QuadExt value;         // 1728 * f(point), valid only when ok
    std::string factored;  // registered factored form, may be empty

    // "label = expanded[ = factored]" or "label = pole".
    std::string text() const;
};

// Evaluates 1728*f at each point exactly.  Poles yield per-point entries
// with ok == false rather than a global failure.
std::vector<SpecialValue> special_values(const RatMap& f,
                                         const std::vector<RegisteredPoint>& points);

// special_values for the stored j-map of the given level at its registered
// points.  error: std::domain_error for levels other than 2 and 3.
std::vector<SpecialValue> special_values_level(long level);

}  // namespace modcurve
