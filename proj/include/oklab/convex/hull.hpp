#pragma once
// Lower convex hulls of finite lifted point sets, exact over the rationals,
// evaluated on target grids; and the hull-based convexity residual.

#include "oklab/convex/grid_function.hpp"
#include "oklab/rational.hpp"

#include <vector>

namespace oklab {

struct LiftedPoint {
    RPoint x;
    double value;
};

// Largest convex function below all input points, evaluated at the target
// grid nodes.  Exact rational hull: monotone chain in 1-D, per-node rational
// simplex LP in 2-D.  Throws std::invalid_argument when the x-points have a
// deficient affine span (message names the deficient dimension) or when a
// target node lies outside the convex hull of the x-points.
GridFunction lower_convex_hull(const std::vector<LiftedPoint>& points, const GridPtr& target);

// Hull of the function's own graph on its own grid.
GridFunction lower_convex_hull(const GridFunction& f);

// max over nodes of (f - hull of f's graph); 0 for convex data.
double convexity_residual(const GridFunction& f);

}  // namespace oklab
