#pragma once
// Separating affine functionals: probe densities rho with
// E_rho(u) = sum_i rho_i u_i w_i distinguishing two model points.  E_rho is
// linear, hence exactly affine along every linear geodesic.

#include "oklab/convex/grid_function.hpp"

#include <string>

namespace oklab {

struct SeparatorResult {
    bool separated = false;
    std::string density_id;  // "1", "x^m", "x1^a x2^b", or "smoothed-sign"
    GridFunction density;
    double gap = 0.0;  // |E_rho(u0) - E_rho(u1)| for the returned density
};

// Scans monomial densities x^m (total degree <= max_power, ascending) and
// finally the smoothed sign of u0 - u1; returns the first with gap >= 1e-6.
// When u0 = u1 within 1e-12 sup-norm the result reports non-separation with
// density_id "none (inputs equal)".
SeparatorResult separator_search(const GridFunction& u0, const GridFunction& u1,
                                 int max_power = 8);

}  // namespace oklab
