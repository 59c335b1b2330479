#pragma once
// The flat model of the space of invariant metrics: convex functions on the
// body with the normalized L^p distance, energy, and rooftop envelopes.

#include "oklab/convex/grid_function.hpp"
#include "oklab/convex/polytope.hpp"

namespace oklab {

// Body, sampling grid, exponent, and normalization V = vol(body) of the
// candidate flat model (L^p on the convex functions over the body).
struct ModelSpace {
    Polytope body;
    GridPtr grid;
    double p = 2.0;
    double volume = 0.0;

    static ModelSpace make(const Polytope& body, int grid_resolution, double p);
};

// (V^{-1} sum_i w_i |u0_i - u1_i|^p)^{1/p} with the grid quadrature weights.
double model_distance(const GridFunction& u0, const GridFunction& u1, double p);

// Monge–Ampère energy in the model: E(u) = -V^{-1} sum_i w_i u_i.
double model_energy(const GridFunction& u);

// Rooftop identity: the largest metric below both inputs dualizes to the
// pointwise max, and E(u0) + E(u1) - 2 E(max) equals the d_1 distance.
struct RooftopResult {
    double e0 = 0.0, e1 = 0.0, e_rooftop = 0.0;
    double d1_energy = 0.0;  // e0 + e1 - 2 e_rooftop
};
RooftopResult energy_and_rooftop(const GridFunction& u0, const GridFunction& u1);

}  // namespace oklab
