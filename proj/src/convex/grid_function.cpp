#include "oklab/convex/grid_function.hpp"

#include "oklab/convex/hull.hpp"
#include "oklab/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace oklab {

GridFunction::GridFunction(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    if (!grid) throw std::invalid_argument("GridFunction: null grid");
    if (values.size() != grid->size())
        throw std::invalid_argument("GridFunction: value count does not match grid size");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("GridFunction: non-finite value");
}

GridFunction GridFunction::sample(const GridPtr& g, const std::function<double(double)>& f) {
    if (g->dim() != 1) throw std::invalid_argument("GridFunction::sample: 1-D grid required");
    std::vector<double> v(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) v[i] = f(g->nodes()[i][0]);
    return GridFunction(g, std::move(v));
}

GridFunction GridFunction::sample2(const GridPtr& g, const std::function<double(double, double)>& f) {
    if (g->dim() != 2) throw std::invalid_argument("GridFunction::sample2: 2-D grid required");
    std::vector<double> v(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) v[i] = f(g->nodes()[i][0], g->nodes()[i][1]);
    return GridFunction(g, std::move(v));
}

GridFunction GridFunction::constant(const GridPtr& g, double c) {
    return GridFunction(g, std::vector<double>(g->size(), c));
}

bool same_grid(const GridFunction& a, const GridFunction& b) {
    return a.grid == b.grid || (a.grid && b.grid && *a.grid == *b.grid);
}

void require_same_grid(const GridFunction& a, const GridFunction& b, const std::string& where) {
    if (!same_grid(a, b)) throw GridMismatchError(where + ": arguments live on different grids");
}

GridFunction affine_combination(double a, const GridFunction& f, double b, const GridFunction& g) {
    require_same_grid(f, g, "affine_combination");
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = a * f.values[i] + b * g.values[i];
    return GridFunction(f.grid, std::move(v));
}

GridFunction pointwise_max(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b, "pointwise_max");
    std::vector<double> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = std::max(a.values[i], b.values[i]);
    return GridFunction(a.grid, std::move(v));
}

double sup_abs_difference(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b, "sup_abs_difference");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a.values[i] - b.values[i]));
    return s;
}

double affine_functional(const GridFunction& density, const GridFunction& u) {
    require_same_grid(density, u, "affine_functional");
    const auto& w = u.grid->weights();
    std::vector<double> terms(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) terms[i] = u.values[i] * density.values[i] * w[i];
    return pairwise_sum(terms);
}

ConvexGridFunction::ConvexGridFunction(GridFunction f, double tau_cvx, bool validate)
    : f_(std::move(f)), tau_(tau_cvx) {
    // The 1-D residual is an O(n log n) exact computation, always affordable;
    // the 2-D one costs an exact LP per node, so it runs only on request.
    if (validate && f_.grid->dim() == 1) {
        double r = convexity_residual(f_);
        if (r > tau_)
            throw NonConvexError("ConvexGridFunction: convexity residual " + std::to_string(r) +
                                 " exceeds tolerance " + std::to_string(tau_));
    }
}

}  // namespace oklab
