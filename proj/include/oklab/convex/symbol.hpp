#pragma once
// Convex functions psi on R^n (n <= 2) — symbols of torus-invariant metrics —
// given either in closed form or as the exact conjugate of sampled data.

#include "oklab/convex/grid_function.hpp"
#include "oklab/convex/polytope.hpp"

#include <array>
#include <functional>
#include <memory>
#include <string>

namespace oklab {

class SymbolFunction {
  public:
    static SymbolFunction closed_form(std::string id, int dim,
                                      std::function<double(double, double)> eval);
    // Conjugate of sampled convex data: psi(rho) = max over grid nodes x of
    // <rho,x> - u(x).  Piecewise linear, convex, growth-bounded for u's
    // polytope by construction.
    static SymbolFunction pl_conjugate(const ConvexGridFunction& u);

    int dim() const { return dim_; }
    const std::string& id() const { return id_; }
    bool piecewise_linear() const { return pl_; }

    double operator()(double r0, double r1 = 0.0) const { return eval_(r0, r1); }

    // min/max of psi(rho) - h_polytope(rho) over probe directions at |rho| = radius
    // (growth-condition diagnostic; both should be finite and moderate).
    std::array<double, 2> growth_gap(const Polytope& body, double radius, int directions = 64) const;

  private:
    SymbolFunction() = default;
    std::string id_;
    int dim_ = 1;
    bool pl_ = false;
    std::function<double(double, double)> eval_;
};

// Standard symbols.
SymbolFunction fs_symbol_p1(int d);         // (d/2) log(1 + e^{2 rho})
SymbolFunction fs_symbol_p2(int d);         // (d/2) log(1 + e^{2 rho1} + e^{2 rho2})
SymbolFunction fs_symbol_p1xp1(int d1, int d2);

}  // namespace oklab
