#pragma once
// Per-degree Chebyshev level values c_k extracted from Gram systems by
// valuation-ordered Cholesky, the hull assembly of the Chebyshev transform,
// and the empirical k -> infinity convergence monitor.

#include "oklab/convex/hull.hpp"
#include "oklab/hermitian/gram.hpp"

#include <string>
#include <vector>

namespace oklab {

// c_k(alpha) = (1/k) log of the minimum weighted L² norm over the monic class
// of z^{k alpha}; alphas are stored in the basis contract order (strictly
// decreasing lex valuation) alongside their values.
struct ChebyshevLevel {
    int k = 0;
    std::vector<Exp2> alphas;
    std::vector<double> values;
    std::string weight_id, quadrature_id;
};

// Cholesky extraction: diagonal systems read off (1/2k) log G_aa; dense
// systems factor G = L L* in the stored order and return (1/k) log L_ii.
// A non-positive pivot raises NumericalBreakdownError with its index.
ChebyshevLevel chebyshev_level(const GramSystem& g);

// Pools the lifted points (alpha/k, value) of every level and returns the
// lower convex hull on the target grid.  Every alpha/k must lie in `body`.
ConvexGridFunction chebyshev_transform(const std::vector<ChebyshevLevel>& levels,
                                       const Polytope& body, const GridPtr& target);

// Least-squares fit value_k(x) ~ a(x) + b(x) log k / k per target node, for a
// geometric ladder of >= 3 levels on the line (levels are piecewise-linearly
// interpolated in x = alpha/k).  `fit_residual` is the per-node max absolute
// fit deviation; `sup_deviation` is filled when a reference is given.
struct ConvergenceProfile {
    GridFunction a;
    GridFunction b;
    GridFunction fit_residual;
    std::vector<std::string> warnings;
    double sup_deviation = 0.0;
    bool has_reference = false;
};

ConvergenceProfile convergence_profile(const std::vector<ChebyshevLevel>& levels,
                                       const GridPtr& target,
                                       const GridFunction* reference = nullptr);

// CSV rows "k,a1[,a2],value" in the stored (descending valuation) order.
std::string chebyshev_level_csv(const ChebyshevLevel& level, int dim);

}  // namespace oklab
