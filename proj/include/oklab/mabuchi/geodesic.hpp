#pragma once
// Geodesic paths of the model (linear interpolation of duals), the hinge
// family demonstrating d_1 non-uniqueness, and bicombing selectors.

#include "oklab/mabuchi/model.hpp"

#include <functional>
#include <string>
#include <vector>

namespace oklab {

// A unit-interval path of convex functions on a shared grid.  The canonical
// rule is linear interpolation of the endpoints; custom rules supply an
// explicit evaluator whose t ∈ {0,1} values must match the endpoints.
class GeodesicPath {
  public:
    using Evaluator = std::function<GridFunction(double)>;

    static GeodesicPath linear(ConvexGridFunction u0, ConvexGridFunction u1);
    static GeodesicPath custom(ConvexGridFunction u0, ConvexGridFunction u1, Evaluator eval,
                               std::string rule);

    // Sampled point, certified convex (throws NonConvexError otherwise).
    ConvexGridFunction at(double t) const;
    // Raw values without the convexity certificate, for dense sweeps.
    GridFunction values_at(double t) const;

    const ConvexGridFunction& start() const { return u0_; }
    const ConvexGridFunction& end() const { return u1_; }
    const std::string& rule() const { return rule_; }
    const GridPtr& grid() const { return u0_.grid(); }

  private:
    GeodesicPath(ConvexGridFunction u0, ConvexGridFunction u1, Evaluator eval, std::string rule);

    ConvexGridFunction u0_, u1_;
    Evaluator eval_;  // empty for the linear rule
    std::string rule_;
};

// The model geodesic: u_t = (1-t) u0 + t u1.
GeodesicPath mabuchi_geodesic(const ConvexGridFunction& u0, const ConvexGridFunction& u1);

// The shipped d_1 non-uniqueness demonstration on the unit interval between
// u0 = 0 and u1 = x: the hinge family u_t(x) = max(0, x - 1 + sqrt(t)).
GeodesicPath d1_alternative_geodesic(const GridPtr& grid);

// A selection rule pairing every ordered endpoint pair with a path.  A
// bicombing must satisfy select(u0,u1)(t) = select(u1,u0)(1-t).
struct BicombingSelector {
    std::string id;
    std::function<GeodesicPath(const ConvexGridFunction&, const ConvexGridFunction&)> select;

    static BicombingSelector mabuchi();
    // Deliberately broken selector: always returns the hinge family of its
    // grid (demonstrates the symmetry failure on the (0, x) pair).
    static BicombingSelector hinge_demo();
};

struct BicombingReport {
    // max over pairs and dyadic t of sup |select(a,b)(t) - select(b,a)(1-t)|.
    double symmetry_residual = 0.0;
    // max over pairs and dyadic (s,t) of |d(u_s,u_t,p) - |t-s| d(u0,u1,p)|.
    double unit_speed_residual = 0.0;
    // d_1 gap at t = 1/2 between the selected path and the hinge family,
    // for pairs with endpoints (0, x) on the unit interval; 0 otherwise.
    double hinge_separation = 0.0;
    std::vector<std::string> notes;
};

BicombingReport bicombing_check(
    const BicombingSelector& selector,
    const std::vector<std::pair<ConvexGridFunction, ConvexGridFunction>>& pairs, double p);

}  // namespace oklab
