#include "oklab/mabuchi/separator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace oklab {

namespace {

std::string monomial_id(int dim, int a, int b) {
    if (dim == 1) {
        if (a == 0) return "1";
        if (a == 1) return "x";
        return "x^" + std::to_string(a);
    }
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a > 0) s += a == 1 ? "x1" : "x1^" + std::to_string(a);
    if (b > 0) {
        if (!s.empty()) s += " ";
        s += b == 1 ? "x2" : "x2^" + std::to_string(b);
    }
    return s;
}

}  // namespace

SeparatorResult separator_search(const GridFunction& u0, const GridFunction& u1, int max_power) {
    require_same_grid(u0, u1, "separator_search");
    SeparatorResult result;
    double sup = 0.0;
    for (std::size_t i = 0; i < u0.size(); ++i) sup = std::max(sup, std::abs(u0[i] - u1[i]));
    if (sup <= 1e-12) {
        result.density_id = "none (inputs equal)";
        return result;
    }

    const GridPtr& grid = u0.grid;
    const double threshold = 1e-6;
    auto try_density = [&](GridFunction rho, std::string id) {
        const double gap = std::abs(affine_functional(rho, u0) - affine_functional(rho, u1));
        if (gap > result.gap) {
            result.gap = gap;
            result.density = rho;
            result.density_id = id;
        }
        if (gap >= threshold) {
            result.separated = true;
            result.density = std::move(rho);
            result.density_id = std::move(id);
            result.gap = gap;
        }
        return result.separated;
    };

    for (int m = 0; m <= max_power && !result.separated; ++m) {
        if (grid->dim() == 1) {
            if (try_density(GridFunction::sample(grid, [m](double x) { return std::pow(x, m); }),
                            monomial_id(1, m, 0)))
                return result;
        } else {
            for (int a = m; a >= 0; --a) {
                const int b = m - a;
                if (try_density(GridFunction::sample2(grid,
                                                      [a, b](double x, double y) {
                                                          return std::pow(x, a) * std::pow(y, b);
                                                      }),
                                monomial_id(2, a, b)))
                    return result;
            }
        }
    }

    // Smoothed sign of the difference: positive pairing with u0 - u1, so the
    // gap is essentially the d_1 distance once the monomials have failed.
    const double eps = 0.1 * sup;
    GridFunction rho = u0;  // reuse the grid
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::tanh((u0[i] - u1[i]) / eps);
    try_density(std::move(rho), "smoothed-sign");
    return result;
}

}  // namespace oklab
