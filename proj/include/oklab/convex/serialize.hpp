#pragma once
// JSON/CSV serialization for polytopes and grid functions.
// Rationals are serialized as strings "p" or "p/q"; doubles round-trip
// exactly (shortest-representation JSON, %.17g CSV).

#include "oklab/convex/grid_function.hpp"
#include "oklab/convex/polytope.hpp"

#include <json.hpp>

#include <string>

namespace oklab {

nlohmann::json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::json grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const nlohmann::json& j);

std::string grid_function_to_csv(const GridFunction& f);

std::string format_double(double v);  // %.17g

}  // namespace oklab
