#include "oklab/mabuchi/geodesic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace oklab {

GeodesicPath::GeodesicPath(ConvexGridFunction u0, ConvexGridFunction u1, Evaluator eval,
                           std::string rule)
    : u0_(std::move(u0)), u1_(std::move(u1)), eval_(std::move(eval)), rule_(std::move(rule)) {
    require_same_grid(u0_.f(), u1_.f(), "GeodesicPath");
    if (eval_) {
        if (sup_abs_difference(eval_(0.0), u0_.f()) > 1e-9 ||
            sup_abs_difference(eval_(1.0), u1_.f()) > 1e-9)
            throw std::invalid_argument("custom path does not match its endpoints at t in {0,1}");
    }
}

GeodesicPath GeodesicPath::linear(ConvexGridFunction u0, ConvexGridFunction u1) {
    return GeodesicPath(std::move(u0), std::move(u1), nullptr, "mabuchi-linear");
}

GeodesicPath GeodesicPath::custom(ConvexGridFunction u0, ConvexGridFunction u1, Evaluator eval,
                                  std::string rule) {
    if (!eval) throw std::invalid_argument("custom path needs an evaluator");
    return GeodesicPath(std::move(u0), std::move(u1), std::move(eval), std::move(rule));
}

GridFunction GeodesicPath::values_at(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("path parameter outside [0,1]");
    if (eval_) return eval_(t);
    return affine_combination(1.0 - t, u0_.f(), t, u1_.f());
}

ConvexGridFunction GeodesicPath::at(double t) const {
    return ConvexGridFunction(values_at(t), std::max(u0_.tolerance(), u1_.tolerance()));
}

GeodesicPath mabuchi_geodesic(const ConvexGridFunction& u0, const ConvexGridFunction& u1) {
    return GeodesicPath::linear(u0, u1);
}

GeodesicPath d1_alternative_geodesic(const GridPtr& grid) {
    if (grid->dim() != 1 || !(grid->polytope() == Polytope::unit_interval()))
        throw std::invalid_argument("the hinge family is defined on the unit interval");
    ConvexGridFunction zero(GridFunction::constant(grid, 0.0));
    ConvexGridFunction ident(GridFunction::sample(grid, [](double x) { return x; }));
    auto eval = [grid](double t) {
        const double s = std::sqrt(t);
        return GridFunction::sample(grid, [s](double x) { return std::max(0.0, x - 1.0 + s); });
    };
    return GeodesicPath::custom(std::move(zero), std::move(ident), eval, "hinge");
}

BicombingSelector BicombingSelector::mabuchi() {
    return {"mabuchi-linear",
            [](const ConvexGridFunction& a, const ConvexGridFunction& b) {
                return mabuchi_geodesic(a, b);
            }};
}

BicombingSelector BicombingSelector::hinge_demo() {
    return {"hinge-demo", [](const ConvexGridFunction& a, const ConvexGridFunction&) {
                return d1_alternative_geodesic(a.grid());
            }};
}

BicombingReport bicombing_check(
    const BicombingSelector& selector,
    const std::vector<std::pair<ConvexGridFunction, ConvexGridFunction>>& pairs, double p) {
    BicombingReport report;
    // Dyadic samples keep the symmetry identity exact in floating point:
    // both 1 - t and 1 - (1 - t) are exact for t = i/16.
    for (const auto& [a, b] : pairs) {
        const GeodesicPath fwd = selector.select(a, b);
        const GeodesicPath bwd = selector.select(b, a);
        for (int i = 0; i <= 16; ++i) {
            const double t = i / 16.0;
            report.symmetry_residual =
                std::max(report.symmetry_residual,
                         sup_abs_difference(fwd.values_at(t), bwd.values_at(1.0 - t)));
        }

        const double d01 = model_distance(a.f(), b.f(), p);
        std::vector<GridFunction> samples;
        for (int i = 0; i <= 8; ++i) samples.push_back(fwd.values_at(i / 8.0));
        for (int i = 0; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j) {
                const double d = model_distance(samples[static_cast<std::size_t>(i)],
                                                samples[static_cast<std::size_t>(j)], p);
                report.unit_speed_residual =
                    std::max(report.unit_speed_residual, std::abs(d - (j - i) / 8.0 * d01));
            }

        // On the canonical (0, x) pair, record how far the selected midpoint
        // sits from the hinge family's midpoint in d_1.
        if (a.grid()->dim() == 1 && a.grid()->polytope() == Polytope::unit_interval()) {
            const GridFunction x_fn = GridFunction::sample(a.grid(), [](double x) { return x; });
            const GridFunction zero_fn = GridFunction::constant(a.grid(), 0.0);
            const bool canonical = (sup_abs_difference(a.f(), zero_fn) <= 1e-12 &&
                                    sup_abs_difference(b.f(), x_fn) <= 1e-12);
            if (canonical) {
                const GeodesicPath hinge = d1_alternative_geodesic(a.grid());
                report.hinge_separation =
                    std::max(report.hinge_separation,
                             model_distance(fwd.values_at(0.5), hinge.values_at(0.5), 1.0));
            }
        }
    }
    if (report.symmetry_residual > 1e-12)
        report.notes.push_back("selector '" + selector.id + "' violates bicombing symmetry");
    return report;
}

}  // namespace oklab
