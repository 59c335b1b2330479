#pragma once
// Curvature-side certificates of the model: Finsler lengths, Busemann
// convexity of distances between geodesics, and the CAT(0) comparison gap.

#include "oklab/mabuchi/geodesic.hpp"

#include <string>
#include <vector>

namespace oklab {

// int_0^1 (V^{-1} int |d/dt u_t|^p)^{1/p} dt by the midpoint rule in t with
// central differences of half-width `fd_width`.  For the linear rule this
// reproduces model_distance to roundoff; the value is parametrization
// invariant.  Speed jumps between adjacent samples are appended to
// `warnings` when provided.
double finsler_length(const GeodesicPath& path, double p, int time_resolution = 200,
                      double fd_width = 1.0 / 400,
                      std::vector<std::string>* warnings = nullptr);

// min over interior samples of the centered second difference of
// t -> model_distance(a(t), b(t), p) on `samples` uniform t values.
// Nonnegative (up to roundoff) when the distance is convex along geodesics.
double busemann_test(const GeodesicPath& a, const GeodesicPath& b, double p, int samples = 101);

// d(midpoint(a,b), c) minus the Euclidean comparison value
// sqrt(d(a,c)^2/2 + d(b,c)^2/2 - d(a,b)^2/4) (the comparison-triangle median,
// which also covers degenerate/collinear triangles).  CAT(0) means gap <= 0;
// the flat model should achieve |gap| ~ 0.  Requires p = 2.
double cat0_flatness_test(const ConvexGridFunction& a, const ConvexGridFunction& b,
                          const ConvexGridFunction& c, double p = 2.0);

}  // namespace oklab
