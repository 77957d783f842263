#pragma once

// JSON map configs, value serialization and textual point references.

#include "lorenz/lorenzmap.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lorenz {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "lorenz-lab/1";

// {"family": "mod_one", "field": {"poly": [...], "interval": [lo, hi]}, "beta": ..., "alpha": ...}
// or {"family": "two_slope", ..., "a": ..., "b": ..., "c": ..., "require_distinct": bool}.
// Values are coefficient arrays (numbers or "p/q" strings) or expressions in the generator b.
// "float_mode": bits switches to interval arithmetic.
LorenzMap map_from_json(const Json& config);
FieldContext field_from_json(const Json& field, unsigned float_bits);
FieldElement element_from_json(const FieldContext& k, const Json& value);

Json element_to_json(const FieldElement& x);  // coefficient strings
Json point_to_json(const SidedPoint& p);       // {"value": [...], "side": "-", "approx": ...}
double rounded(double x);                      // fixed 12-digit rounding for reports

// Point references: 0, 1, c, c-, c+, 0+, 1-, f(0), f(1), z(j), orb(REF,n), expr:<expression>.
// z(j) needs the sorted points of a cycle.
SidedPoint resolve_point(const LorenzMap& f, const std::string& ref,
                         const std::vector<SidedPoint>* cycle = nullptr);

} // namespace lorenz
