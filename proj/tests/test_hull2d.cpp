// Exact 2-D lower convex hulls via the per-node rational LP.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oklab/convex/grid_function.hpp"
#include "oklab/convex/hull.hpp"
#include "oklab/convex/polytope.hpp"

#include <random>

using namespace oklab;

namespace {

Polytope unit_square() { return Polytope::box(Rational(1), Rational(1)); }

}  // namespace

TEST_CASE("hull of x1^2+x2^2 on the 9 half-lattice points of the square") {
    std::vector<LiftedPoint> pts;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            double x = i / 2.0, y = j / 2.0;
            pts.push_back({RPoint(Rational(i, 2), Rational(j, 2)), x * x + y * y});
        }
    auto g = Grid::make(unit_square(), 2);
    GridFunction h = lower_convex_hull(pts, g);

    // At the center the lower facets give the sampled value 1/2 (corner
    // average along either diagonal), not the smooth minimum 1/4.
    long c = g->node_at(1, 1);
    REQUIRE(c >= 0);
    CHECK(h.values[static_cast<std::size_t>(c)] == doctest::Approx(0.5));
    // Corners reproduce their own values.
    CHECK(h.values[static_cast<std::size_t>(g->node_at(0, 0))] == doctest::Approx(0.0));
    CHECK(h.values[static_cast<std::size_t>(g->node_at(2, 2))] == doctest::Approx(2.0));
    // Edge midpoints: min over facets; along the edge x2=0 the hull of
    // {0, 1/4-sample, 1} is the sample 1/4 (convex along the edge).
    CHECK(h.values[static_cast<std::size_t>(g->node_at(1, 0))] == doctest::Approx(0.25));
}

TEST_CASE("2-D hull output is convex and minorizes the data") {
    std::mt19937_64 rng(20260814);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    auto g = Grid::make(unit_square(), 6);
    std::vector<LiftedPoint> pts;
    for (std::size_t i = 0; i < g->size(); ++i)
        pts.push_back({g->nodes_exact()[i], U(rng)});
    GridFunction h = lower_convex_hull(pts, g);
    for (std::size_t i = 0; i < g->size(); ++i) CHECK(h.values[i] <= pts[i].value + 1e-12);
    CHECK(convexity_residual(h) <= 1e-12);
}

TEST_CASE("2-D degenerate affine span") {
    auto g = Grid::make(unit_square(), 2);
    std::vector<LiftedPoint> line;
    for (int i = 0; i <= 4; ++i) line.push_back({RPoint(Rational(i, 4), Rational(i, 4)), 0.0});
    CHECK_THROWS_WITH_AS(lower_convex_hull(line, g), doctest::Contains("dimension 1 of 2"),
                         std::invalid_argument);
}

TEST_CASE("2-D node outside the sites raises") {
    auto g = Grid::make(unit_square(), 2);
    std::vector<LiftedPoint> small = {{RPoint(Rational(0), Rational(0)), 0.0},
                                      {RPoint(Rational(1, 2), Rational(0)), 0.0},
                                      {RPoint(Rational(0), Rational(1, 2)), 0.0}};
    CHECK_THROWS_WITH_AS(lower_convex_hull(small, g), doctest::Contains("outside"),
                         std::invalid_argument);
}

TEST_CASE("2-D convexity residual on a bumped plane") {
    auto g = Grid::make(unit_square(), 4);
    GridFunction f = GridFunction::sample2(g, [](double x, double y) { return x + 2 * y; });
    CHECK(convexity_residual(f) <= 1e-12);
    long c = g->node_at(2, 2);
    REQUIRE(c >= 0);
    f.values[static_cast<std::size_t>(c)] += 0.1;
    CHECK(convexity_residual(f) == doctest::Approx(0.1).epsilon(1e-12));
}
