#pragma once
// Scalar functions sampled on a Grid, and the convexity-certified wrapper.

#include "oklab/convex/grid.hpp"
#include "oklab/errors.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace oklab {

struct GridFunction {
    GridPtr grid;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(GridPtr g, std::vector<double> v);
    // Sample a callable: 1-D f(x), 2-D f(x1, x2), at the double node coords.
    static GridFunction sample(const GridPtr& g, const std::function<double(double)>& f);
    static GridFunction sample2(const GridPtr& g, const std::function<double(double, double)>& f);
    static GridFunction constant(const GridPtr& g, double c);

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
};

bool same_grid(const GridFunction& a, const GridFunction& b);
void require_same_grid(const GridFunction& a, const GridFunction& b, const std::string& where);

// a*f + b*g on a shared grid.
GridFunction affine_combination(double a, const GridFunction& f, double b, const GridFunction& g);
GridFunction pointwise_max(const GridFunction& a, const GridFunction& b);
double sup_abs_difference(const GridFunction& a, const GridFunction& b);

// E_rho(u) = sum over nodes of u * rho * w with the grid quadrature weights.
double affine_functional(const GridFunction& density, const GridFunction& u);

// A GridFunction certified convex: construction checks the hull residual
// against tau (1-D exactly; in 2-D the check is available via
// convexity_residual and runs on construction only when `validate` is set,
// since it costs one exact LP per node).
class ConvexGridFunction {
  public:
    explicit ConvexGridFunction(GridFunction f, double tau_cvx = 1e-9, bool validate = true);

    const GridFunction& f() const { return f_; }
    const GridPtr& grid() const { return f_.grid; }
    double tolerance() const { return tau_; }
    std::size_t size() const { return f_.size(); }
    double operator[](std::size_t i) const { return f_.values[i]; }

  private:
    GridFunction f_;
    double tau_;
};

}  // namespace oklab
