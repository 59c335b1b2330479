// Model-space distances and energies, geodesics and the hinge family,
// curvature certificates, separating functionals, and the flatness certifier.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oklab/errors.hpp"
#include "oklab/mabuchi/certify.hpp"
#include "oklab/mabuchi/curvature.hpp"
#include "oklab/mabuchi/separator.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>

using namespace oklab;

namespace {

GridPtr unit_grid(int m) { return Grid::make(Polytope::unit_interval(), m); }

// Legendre dual of the Fubini-Study symbol on [0,1]; endpoint values are 0.
double fs_dual(double x) {
    double s = 0.0;
    if (x > 0.0) s += x * std::log(x);
    if (x < 1.0) s += (1.0 - x) * std::log(1.0 - x);
    return 0.5 * s;
}

ConvexGridFunction cgf(const GridFunction& f) { return ConvexGridFunction(f); }

}  // namespace

TEST_CASE("model space construction and L^p distances") {
    ModelSpace ms = ModelSpace::make(Polytope::unit_interval(), 512, 2.0);
    CHECK(ms.volume == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ms.grid->size() == 513);
    CHECK(ms.p == 2.0);
    CHECK(ms.body == Polytope::unit_interval());
    CHECK_THROWS_AS(ModelSpace::make(Polytope::unit_interval(), 512, 0.5), std::invalid_argument);

    const GridPtr g = ms.grid;
    const GridFunction zero = GridFunction::constant(g, 0.0);
    const GridFunction xf = GridFunction::sample(g, [](double x) { return x; });
    const GridFunction moved = GridFunction::sample(g, [](double x) { return x + 2.5; });

    // Translates are at distance |c| for every exponent.
    for (double p : {1.0, 2.0, 3.0})
        CHECK(model_distance(xf, moved, p) == doctest::Approx(2.5).epsilon(1e-13));

    // (0, x) on [0,1]: the Simpson weights integrate low-degree monomials
    // exactly, so the distances match the continuum values to roundoff.
    CHECK(model_distance(zero, xf, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(model_distance(zero, xf, 2.0) ==
          doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(model_distance(zero, xf, 3.0) ==
          doctest::Approx(std::pow(0.25, 1.0 / 3.0)).epsilon(1e-13));

    CHECK_THROWS_AS(model_distance(zero, xf, 0.99), std::invalid_argument);
    CHECK_THROWS_AS(model_distance(zero, GridFunction::constant(unit_grid(256), 0.0), 1.0),
                    GridMismatchError);
}

TEST_CASE("energy and the rooftop identity") {
    const GridPtr g = unit_grid(512);
    const GridFunction zero = GridFunction::constant(g, 0.0);
    const GridFunction xf = GridFunction::sample(g, [](double x) { return x; });
    const GridFunction mirrored = GridFunction::sample(g, [](double x) { return 1.0 - x; });

    CHECK(model_energy(GridFunction::constant(g, 0.3)) == doctest::Approx(-0.3).epsilon(1e-14));
    CHECK(model_energy(xf) == doctest::Approx(-0.5).epsilon(1e-13));

    // Crossing pair: max(x, 1-x) has its kink on a panel boundary, so the
    // energies and the d_1 distance are all quadrature-exact.
    RooftopResult r = energy_and_rooftop(xf, mirrored);
    CHECK(r.e0 == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(r.e1 == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(r.e_rooftop == doctest::Approx(-0.75).epsilon(1e-13));
    CHECK(r.d1_energy == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(r.d1_energy - model_distance(xf, mirrored, 1.0)) < 1e-13);

    // Comparable pair (0 <= x pointwise): rooftop reduces to the larger input.
    RooftopResult c = energy_and_rooftop(zero, xf);
    CHECK(c.e_rooftop == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(std::abs(c.d1_energy - model_distance(zero, xf, 1.0)) < 1e-13);
}

TEST_CASE("mabuchi geodesics interpolate duals linearly") {
    const GridPtr g = unit_grid(512);
    const GridFunction f0 = GridFunction::sample(g, fs_dual);
    const GridFunction f1 = GridFunction::sample(g, [](double x) { return 0.5 * x * x; });
    const GeodesicPath path = mabuchi_geodesic(cgf(f0), cgf(f1));

    CHECK(path.rule() == "mabuchi-linear");
    CHECK(sup_abs_difference(path.values_at(0.0), f0) == 0.0);
    CHECK(sup_abs_difference(path.values_at(1.0), f1) == 0.0);
    CHECK_THROWS_AS(path.values_at(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(path.values_at(1.01), std::invalid_argument);

    // Midpoint value at the node x = 1/2: (fs_dual(1/2) + 1/8) / 2.
    const long mid = g->node_at(256);
    REQUIRE(mid >= 0);
    const GridFunction um = path.values_at(0.5);
    CHECK(um[static_cast<std::size_t>(mid)] ==
          doctest::Approx(-0.11078679513998632).epsilon(1e-14));

    // Interior slices carry the convexity certificate.
    CHECK_NOTHROW(path.at(0.25));
    CHECK_NOTHROW(path.at(0.75));

    // Constant speed for every exponent.
    for (double p : {1.0, 2.0, 3.0}) {
        const double d01 = model_distance(f0, f1, p);
        for (double s : {0.0, 0.3, 0.7})
            for (double t : {0.5, 0.9, 1.0}) {
                if (s >= t) continue;
                const double dst = model_distance(path.values_at(s), path.values_at(t), p);
                CHECK(std::abs(dst - (t - s) * d01) < 1e-12);
            }
    }

    // Custom rules must hit the declared endpoints.
    CHECK_THROWS_AS(GeodesicPath::custom(
                        cgf(f0), cgf(f1), [&](double) { return f0; }, "broken"),
                    std::invalid_argument);
}

TEST_CASE("finsler length certificates") {
    const GridPtr g = unit_grid(512);
    const ConvexGridFunction zero = cgf(GridFunction::constant(g, 0.0));
    const ConvexGridFunction xf = cgf(GridFunction::sample(g, [](double x) { return x; }));
    const GeodesicPath lin = mabuchi_geodesic(zero, xf);

    CHECK(std::abs(finsler_length(lin, 1.0) - 0.5) < 1e-10);
    const double d2 = model_distance(zero.f(), xf.f(), 2.0);
    CHECK(std::abs(finsler_length(lin, 2.0) - d2) < 1e-10);
    CHECK(std::abs(finsler_length(lin, 3.0) - model_distance(zero.f(), xf.f(), 3.0)) < 1e-10);

    // A constant path has zero length (up to finite-difference rounding).
    CHECK(finsler_length(mabuchi_geodesic(xf, xf), 2.0) < 1e-12);

    // Length is invariant under the quadratic reparametrization t -> t^2.
    const GeodesicPath repar = GeodesicPath::custom(
        zero, xf,
        [&](double t) { return affine_combination(1.0 - t * t, zero.f(), t * t, xf.f()); },
        "quadratic-clock");
    CHECK(std::abs(finsler_length(repar, 2.0) - d2) < 1e-11);

    // The hinge family is also a unit-speed d_1 segment of length 1/2.
    CHECK(std::abs(finsler_length(d1_alternative_geodesic(g), 1.0) - 0.5) < 1e-3);

    // A discontinuous clock triggers a speed-jump warning.
    std::vector<std::string> warn;
    const GeodesicPath jumpy = GeodesicPath::custom(
        zero, xf, [&](double t) { return t < 0.5 ? zero.f() : xf.f(); }, "step");
    finsler_length(jumpy, 1.0, 200, 1.0 / 400, &warn);
    CHECK(!warn.empty());
}

TEST_CASE("busemann convexity along geodesic pairs") {
    const GridPtr g = unit_grid(256);
    const ConvexGridFunction zero = cgf(GridFunction::constant(g, 0.0));
    const ConvexGridFunction xf = cgf(GridFunction::sample(g, [](double x) { return x; }));
    const ConvexGridFunction sq = cgf(GridFunction::sample(g, [](double x) { return x * x; }));
    const ConvexGridFunction aff =
        cgf(GridFunction::sample(g, [](double x) { return 0.2 + 0.3 * x; }));

    const GeodesicPath a = mabuchi_geodesic(zero, xf);

    // Identical paths: the distance vanishes identically.
    CHECK(busemann_test(a, a, 2.0) == 0.0);

    // Against a constant path the distance is linear in t.
    const GeodesicPath still = mabuchi_geodesic(zero, zero);
    CHECK(std::abs(busemann_test(a, still, 2.0)) < 1e-12);

    // Generic geodesic pairs: convex along t for every exponent.
    const GeodesicPath b = mabuchi_geodesic(sq, aff);
    for (double p : {1.0, 2.0, 3.0}) CHECK(busemann_test(a, b, p) >= -1e-9);

    CHECK_THROWS_AS(busemann_test(a, b, 2.0, 2), std::invalid_argument);
}

TEST_CASE("cat0 comparison gaps vanish") {
    const GridPtr g = unit_grid(512);
    const ConvexGridFunction zero = cgf(GridFunction::constant(g, 0.0));
    const ConvexGridFunction xf = cgf(GridFunction::sample(g, [](double x) { return x; }));
    const ConvexGridFunction half = cgf(GridFunction::sample(g, [](double x) { return 0.5 * x; }));
    const ConvexGridFunction sq =
        cgf(GridFunction::sample(g, [](double x) { return 0.5 * x * x; }));

    // Collinear triangle: the midpoint of (0, x) is x/2 itself.
    CHECK(std::abs(cat0_flatness_test(zero, xf, half)) < 1e-12);

    // Generic triangle in the flat model.
    CHECK(std::abs(cat0_flatness_test(zero, xf, sq)) < 1e-9);

    // Right triangle 0, x - 1/2, const 0.3: the legs are orthogonal, so the
    // squared distances satisfy Pythagoras exactly.
    const ConvexGridFunction leg =
        cgf(GridFunction::sample(g, [](double x) { return x - 0.5; }));
    const ConvexGridFunction top = cgf(GridFunction::constant(g, 0.3));
    const double dab = model_distance(zero.f(), leg.f(), 2.0);
    const double dac = model_distance(zero.f(), top.f(), 2.0);
    const double dbc = model_distance(leg.f(), top.f(), 2.0);
    CHECK(dab == doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-13));
    CHECK(dac == doctest::Approx(0.3).epsilon(1e-13));
    CHECK(std::abs(dab * dab + dac * dac - dbc * dbc) < 1e-12);
    CHECK(std::abs(cat0_flatness_test(zero, leg, top)) < 1e-9);

    CHECK_THROWS_AS(cat0_flatness_test(zero, xf, sq, 1.0), std::invalid_argument);
}

TEST_CASE("separating affine functionals") {
    const GridPtr g = unit_grid(512);
    const GridFunction xf = GridFunction::sample(g, [](double x) { return x; });
    const GridFunction sq = GridFunction::sample(g, [](double x) { return x * x; });

    // Constant offset: the uniform density already separates.
    SeparatorResult c = separator_search(xf, GridFunction::sample(g, [](double x) {
                                             return x + 0.5;
                                         }));
    CHECK(c.separated);
    CHECK(c.density_id == "1");
    CHECK(c.gap == doctest::Approx(0.5).epsilon(1e-13));

    // x vs x^2 differ in mean by 1/6.
    SeparatorResult m = separator_search(xf, sq);
    CHECK(m.separated);
    CHECK(m.density_id == "1");
    CHECK(m.gap == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    // Equal means force the scan to the next monomial.
    SeparatorResult d = separator_search(GridFunction::constant(g, 0.0),
                                         GridFunction::sample(g, [](double x) {
                                             return x - 0.5;
                                         }));
    CHECK(d.separated);
    CHECK(d.density_id == "x");
    CHECK(d.gap == doctest::Approx(1.0 / 12.0).epsilon(1e-12));

    // With the monomial budget exhausted the smoothed sign still separates.
    SeparatorResult f = separator_search(GridFunction::constant(g, 0.0),
                                         GridFunction::sample(
                                             g, [](double x) { return x - 0.5; }),
                                         0);
    CHECK(f.separated);
    CHECK(f.density_id == "smoothed-sign");
    CHECK(f.gap >= 1e-6);

    // Equal inputs cannot be separated.
    SeparatorResult e = separator_search(xf, xf);
    CHECK(!e.separated);
    CHECK(e.density_id == "none (inputs equal)");
    CHECK(e.gap == 0.0);
}

TEST_CASE("hinge family breaks d1 uniqueness") {
    const GridPtr g = unit_grid(512);
    const GeodesicPath hinge = d1_alternative_geodesic(g);
    CHECK(hinge.rule() == "hinge");

    // The t = 1/4 slice is (x - 1/2)_+, of mass t/2 = 1/8.
    const GridFunction q = hinge.values_at(0.25);
    CHECK(sup_abs_difference(
              q, GridFunction::sample(g, [](double x) { return std::max(0.0, x - 0.5); })) ==
          0.0);
    CHECK(model_energy(q) == doctest::Approx(-0.125).epsilon(1e-13));

    // Endpoints are exactly 0 and x.
    CHECK(sup_abs_difference(hinge.values_at(0.0), GridFunction::constant(g, 0.0)) == 0.0);
    CHECK(sup_abs_difference(hinge.values_at(1.0),
                             GridFunction::sample(g, [](double x) { return x; })) == 0.0);

    // Unit speed in d_1 at kink-aligned times t = (i/16)^2 (so the hinge
    // location 1 - i/16 is a quadrature panel boundary of the m = 512 grid).
    const double d01 = model_distance(hinge.values_at(0.0), hinge.values_at(1.0), 1.0);
    CHECK(d01 == doctest::Approx(0.5).epsilon(1e-13));
    for (int i = 0; i <= 16; ++i)
        for (int j = i + 1; j <= 16; ++j) {
            const double s = (i / 16.0) * (i / 16.0);
            const double t = (j / 16.0) * (j / 16.0);
            const double dst = model_distance(hinge.values_at(s), hinge.values_at(t), 1.0);
            CHECK(std::abs(dst - (t - s) * d01) < 1e-12);
        }

    // At t = 1/2 the hinge sits a definite d_1 distance from the linear
    // geodesic: the gap is (1 - 1/sqrt(2))^2.
    const GeodesicPath lin = mabuchi_geodesic(
        cgf(GridFunction::constant(g, 0.0)),
        cgf(GridFunction::sample(g, [](double x) { return x; })));
    const double sep = model_distance(hinge.values_at(0.5), lin.values_at(0.5), 1.0);
    CHECK(sep > 0.03);
    CHECK(sep == doctest::Approx(0.08578643762690485).epsilon(1e-4));
}

TEST_CASE("bicombing symmetry and the hinge violation") {
    const GridPtr g = unit_grid(512);
    const ConvexGridFunction zero = cgf(GridFunction::constant(g, 0.0));
    const ConvexGridFunction xf = cgf(GridFunction::sample(g, [](double x) { return x; }));
    const ConvexGridFunction sq =
        cgf(GridFunction::sample(g, [](double x) { return 0.5 * x * x; }));

    std::vector<std::pair<ConvexGridFunction, ConvexGridFunction>> pairs{{zero, xf}, {sq, xf}};
    const BicombingReport good = bicombing_check(BicombingSelector::mabuchi(), pairs, 1.0);
    CHECK(good.symmetry_residual == 0.0);  // dyadic t: bitwise symmetric
    CHECK(good.unit_speed_residual < 1e-12);
    CHECK(good.hinge_separation > 0.03);
    CHECK(good.notes.empty());

    const BicombingReport bad =
        bicombing_check(BicombingSelector::hinge_demo(), {{zero, xf}}, 1.0);
    CHECK(bad.symmetry_residual > 0.9);
    CHECK(!bad.notes.empty());
    CHECK(bad.hinge_separation < 1e-15);
    CHECK(bad.unit_speed_residual < 1e-4);
}

TEST_CASE("flatness certifier on the line") {
    const Variety p1 = Variety::proj_space(1, 1);
    const FlagSpec flag = FlagSpec::coordinate(1);
    const GridPtr g = unit_grid(256);

    const ConvexGridFunction dual = cgf(GridFunction::sample(g, fs_dual));
    const ConvexGridFunction zero = cgf(GridFunction::constant(g, 0.0));
    const ConvexGridFunction moved = cgf(GridFunction::sample(g, [](double x) {
        return fs_dual(x) + 0.7;
    }));

    CertifyOptions opts;
    opts.kladder = {16, 32, 64};
    opts.affinity_ts = {0.0, 0.25, 0.5, 0.75, 1.0};
    opts.distance_samples = 51;

    std::vector<CertifyPair> pairs;
    pairs.push_back({"identical", dual, dual});
    pairs.push_back({"translate", dual, moved});
    pairs.push_back({"generic", zero, dual});

    const FlatnessReport report = theorem_a_certify(p1, flag, pairs, opts);
    CHECK(report.verdict);
    CHECK(report.kladder == std::vector<int>{16, 32, 64});
    REQUIRE(report.pairs.size() == 3);

    const PairReport& same = report.pairs[0];
    CHECK(same.pass);
    CHECK(same.degenerate);
    CHECK(same.translation);
    CHECK(same.separator_density == "none (inputs equal)");
    for (const AffinityPerK& row : same.affinity) CHECK(row.residual < 1e-12);

    const PairReport& shift = report.pairs[1];
    CHECK(shift.pass);
    CHECK(shift.translation);
    CHECK(!shift.degenerate);
    for (const AffinityPerK& row : shift.affinity) CHECK(row.residual < 1e-12);
    CHECK(shift.separator_density == "1");
    CHECK(shift.separator_gap == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(shift.pullback_affinity < 1e-12);

    const PairReport& gen = report.pairs[2];
    CHECK(gen.pass);
    CHECK(!gen.translation);
    REQUIRE(gen.affinity.size() == 3);
    CHECK(gen.affinity[0].residual > gen.affinity[2].residual);  // levels tighten with k
    CHECK(gen.affinity_extrapolated <= 1e-2);
    CHECK(gen.linearity_residual < 1e-12);
    CHECK(gen.finsler_residual < 1e-3);
    CHECK(gen.busemann_min >= -1e-9);
    CHECK(std::abs(gen.cat0_gap) < 1e-9);
    CHECK(gen.separator_gap >= 1e-6);
    CHECK(gen.pullback_affinity < 1e-12);

    // Serialization round-trips through JSON and lists one CSV row per pair.
    const nlohmann::json j = nlohmann::json::parse(flatness_report_json(report));
    CHECK(j["verdict"] == "pass");
    CHECK(j["pairs"].size() == 3);
    CHECK(j["pairs"][2]["affinity"]["per_k"].size() == 3);
    CHECK(j["pairs"][2]["separator"]["gap"].get<double>() >= 1e-6);
    const std::string csv = flatness_report_csv(report);
    CHECK(csv.find("pair,translation,") == 0);
    CHECK(csv.find("generic,0,") != std::string::npos);

    // Guard rails: the certifier is wired to the coordinate-flag pipeline and
    // checks the pairs live on the flag body.
    CHECK_THROWS_AS(
        theorem_a_certify(p1, FlagSpec::p1_point(Rational(1)), pairs, opts),
        UnsupportedCombinationError);
    const GridPtr wide = Grid::make(Polytope::interval(Rational(0), Rational(2)), 64);
    std::vector<CertifyPair> offbody;
    offbody.push_back({"off", cgf(GridFunction::constant(wide, 0.0)),
                       cgf(GridFunction::constant(wide, 1.0))});
    CHECK_THROWS_AS(theorem_a_certify(p1, flag, offbody, opts), std::invalid_argument);
}
