#pragma once
// Legendre–Fenchel transforms between symbols on R^n and convex functions on
// the moment polytope.

#include "oklab/convex/grid_function.hpp"
#include "oklab/convex/symbol.hpp"

namespace oklab {

struct LegendreParams {
    double spacing_1d = 1.0 / 256;  // rho-grid spacing per axis
    double spacing_2d = 1.0 / 64;
    double radius0 = 8.0;           // initial rho-grid half-width
    int max_doublings = 6;
    double tau_cvx = 1e-9;          // tolerance passed to the output
    double* used_radius = nullptr;  // optional diagnostic out-param
};

// u(x) = sup_rho (<x,rho> - psi(rho)) at every target node, via the
// linear-time discrete transform over a rho-grid whose radius doubles until
// the argmax is interior for every interior target node.  Throws
// GrowthViolationError (with the offending node) when the expansion cap is
// hit, NonConvexError when the psi samples are not convex along an axis.
ConvexGridFunction legendre_transform(const SymbolFunction& psi, const GridPtr& target,
                                      const LegendreParams& params = {});

// psi(rho) = max over grid nodes x of (<x,rho> - u(x)): the exact conjugate
// of the sampled data, piecewise linear and convex.
SymbolFunction legendre_back(const ConvexGridFunction& u);

// Convenience: evaluate a symbol on a list of rho points.
std::vector<double> tabulate(const SymbolFunction& psi,
                             const std::vector<std::array<double, 2>>& rho_points);

}  // namespace oklab
