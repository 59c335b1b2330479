#pragma once
// Okounkov bodies: exact convex hulls of the normalized graded point sets,
// and the volume identity against the intersection number.

#include "oklab/convex/polytope.hpp"
#include "oklab/okounkov/flag.hpp"
#include "oklab/okounkov/valuation.hpp"
#include "oklab/okounkov/variety.hpp"

#include <string>
#include <utility>
#include <vector>

namespace oklab {

// Convex hull of ∪_{k ≤ k_max} k⁻¹·Δᵏ, exact.
Polytope okounkov_body(const Variety& variety, const FlagSpec& flag, int k_max);

struct VolumeIdentity {
    Rational body_volume;  // vol of the computed body
    Rational expected;     // (Lⁿ)/n!
    bool holds = false;    // exact equality
};

VolumeIdentity body_volume_check(const Variety& variety, const Polytope& body);

// CSV rows "k,a1[,a2]" for a family of graded point sets.
std::string graded_points_to_csv(const std::vector<std::pair<int, std::vector<Exp2>>>& levels,
                                 int dim);

}  // namespace oklab
