// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
//
//   AC1  Okounkov bodies and volume identities, exact rational arithmetic
//   AC2  quadrature Gram vs the factorial formula on the projective line
//   AC3  Chebyshev levels converge to the Legendre dual (rate and limit)
//   AC4  translation equivariance of the levels
//   AC5  level affinity along a Mabuchi geodesic (certifier, extrapolated)
//   AC6  flat model geometry: linearity, Finsler lengths, Busemann, CAT(0)
//   AC7  two distinct d_1 geodesics and the bicombing symmetry check
//   AC8  separating affine functionals on seeded pairs
#include "oklab/convex/legendre.hpp"
#include "oklab/hermitian/chebyshev.hpp"
#include "oklab/hermitian/gram.hpp"
#include "oklab/mabuchi/certify.hpp"
#include "oklab/mabuchi/curvature.hpp"
#include "oklab/mabuchi/geodesic.hpp"
#include "oklab/mabuchi/model.hpp"
#include "oklab/mabuchi/separator.hpp"
#include "oklab/okounkov/body.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace oklab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Appends "label=value" style fragments and tracks the conjunction of checks.
struct Scorecard {
    Outcome out;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + ("FAILED " + what);
        }
    }
    void note(const std::string& what) {
        if (out.pass && out.detail.size() < 160)
            out.detail += (out.detail.empty() ? "" : ", ") + what;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

ConvexGridFunction fs_dual_on(const Variety& variety, const GridPtr& grid) {
    return legendre_transform(WeightFunction::fubini_study(variety).symbol(), grid);
}

// ------------------------------------------------------------------ AC1
Outcome ac1() {
    Scorecard s;
    {
        const Variety v = Variety::parse("p1:2");
        const Polytope body = okounkov_body(v, FlagSpec::coordinate(1), 5);
        s.expect(body == Polytope::interval(Rational(0), Rational(2)), "p1:2 body == [0,2]");
        s.expect(body_volume_check(v, body).holds, "p1:2 volume identity");
    }
    {
        const Variety v = Variety::parse("p2:1");
        const Polytope expected = Polytope::simplex2(Rational(1));
        const Polytope coord = okounkov_body(v, FlagSpec::coordinate(2), 5);
        const Polytope random = okounkov_body(v, FlagSpec::random_linear(2, 2026), 5);
        s.expect(coord == expected, "p2:1 coordinate-flag body == unit simplex");
        s.expect(random == expected, "p2:1 random-linear-flag body == unit simplex");
        s.expect(body_volume_check(v, coord).holds, "p2:1 volume identity (coordinate)");
        s.expect(body_volume_check(v, random).holds, "p2:1 volume identity (random)");
    }
    {
        const Variety v = Variety::parse("p1xp1:1,2");
        const Polytope body = okounkov_body(v, FlagSpec::coordinate(2), 5);
        s.expect(body == Polytope::box(Rational(1), Rational(2)), "p1xp1:1,2 body == [0,1]x[0,2]");
        s.expect(body_volume_check(v, body).holds, "p1xp1:1,2 volume identity");
    }
    s.note("3 bodies exact, volumes exact");
    return s.out;
}

// ------------------------------------------------------------------ AC2
Outcome ac2() {
    Scorecard s;
    const Variety v = Variety::parse("p1:1");
    const FlagSpec flag = FlagSpec::coordinate(1);
    double worst = 0.0;
    for (int k : {16, 32, 64}) {
        const GramSystem g = gram_matrix(k, section_basis(v, flag, k),
                                         WeightFunction::fubini_study(v),
                                         QuadratureRule::shipped(v, k));
        worst = std::max(worst, gram_relative_error(g, gram_exact_fs(k, v)));
    }
    s.expect(worst <= 1e-10, "Gram relative error " + fmt(worst) + " <= 1e-10");
    s.note("max rel err " + fmt(worst));
    return s.out;
}

// ------------------------------------------------------------------ AC3
Outcome ac3() {
    Scorecard s;
    const Variety v = Variety::parse("p1:1");
    const FlagSpec flag = FlagSpec::coordinate(1);
    const WeightFunction fs = WeightFunction::fubini_study(v);
    const Polytope body = okounkov_body(v, flag, 2);
    const GridPtr target = Grid::make(body, 512);
    const ConvexGridFunction dual = fs_dual_on(v, target);

    std::vector<ChebyshevLevel> levels;
    std::vector<double> sups;
    for (int k : {16, 32, 64, 128}) {
        levels.push_back(
            chebyshev_level(gram_matrix(k, section_basis(v, flag, k), fs,
                                        QuadratureRule::shipped(v, k))));
        const ConvexGridFunction ck = chebyshev_transform({levels.back()}, body, target);
        double sup = 0.0;
        for (std::size_t i = 0; i < target->size(); ++i) {
            const double x = target->nodes()[i][0];
            if (x >= 0.1 && x <= 0.9) sup = std::max(sup, std::abs(ck[i] - dual[i]));
        }
        sups.push_back(sup);
    }
    s.expect(sups[2] <= 0.06, "sup at k=64 " + fmt(sups[2]) + " <= 0.06");
    for (std::size_t i = 0; i + 1 < sups.size(); ++i)
        s.expect(sups[i + 1] < sups[i], "sup strictly decreasing at rung " + std::to_string(i));

    // Stirling golden value: c_64(1/2) = (1/128) log(32! 32! / 65!).
    const double golden = (2.0 * std::lgamma(33.0) - std::lgamma(66.0)) / 128.0;
    double at_half = 0.0;
    for (std::size_t i = 0; i < levels[2].alphas.size(); ++i)
        if (levels[2].alphas[i][0] == 32) at_half = levels[2].values[i];
    s.expect(std::abs(at_half - golden) <= 1e-9,
             "c_64 at alpha=32: " + fmt(std::abs(at_half - golden)) + " from factorial value");

    GridFunction reference = dual.f();
    const ConvergenceProfile profile = convergence_profile(levels, target, &reference);
    s.expect(profile.sup_deviation <= 5e-3,
             "extrapolated deviation " + fmt(profile.sup_deviation) + " <= 5e-3");
    s.note("sups " + fmt(sups[0]) + ">" + fmt(sups[1]) + ">" + fmt(sups[2]) + ">" + fmt(sups[3]) +
           ", extrap " + fmt(profile.sup_deviation));
    return s.out;
}

// ------------------------------------------------------------------ AC4
Outcome ac4() {
    Scorecard s;
    const Variety v = Variety::parse("p1:1");
    const FlagSpec flag = FlagSpec::coordinate(1);
    const WeightFunction fs = WeightFunction::fubini_study(v);
    const WeightFunction shifted = fs.shifted(0.7);
    double worst = 0.0;
    for (int k : {16, 32, 64, 128}) {
        const SectionBasis basis = section_basis(v, flag, k);
        const QuadratureRule rule = QuadratureRule::shipped(v, k);
        const ChebyshevLevel base = chebyshev_level(gram_matrix(k, basis, fs, rule));
        const ChebyshevLevel moved = chebyshev_level(gram_matrix(k, basis, shifted, rule));
        for (std::size_t i = 0; i < base.values.size(); ++i)
            worst = std::max(worst, std::abs(moved.values[i] - (base.values[i] - 0.7)));
    }
    s.expect(worst <= 1e-12, "translation residual " + fmt(worst) + " <= 1e-12");
    s.note("max residual " + fmt(worst));
    return s.out;
}

// ------------------------------------------------------------------ AC5
Outcome ac5() {
    Scorecard s;
    const Variety v = Variety::parse("p1:1");
    const FlagSpec flag = FlagSpec::coordinate(1);
    const GridPtr grid = Grid::make(okounkov_body(v, flag, 2), 512);
    const ConvexGridFunction dual = fs_dual_on(v, grid);
    const ConvexGridFunction half_square(
        GridFunction::sample(grid, [](double x) { return 0.5 * x * x; }));
    const ConvexGridFunction dual_up(
        affine_combination(1.0, dual.f(), 0.7, GridFunction::constant(grid, 1.0)),
        dual.tolerance());

    CertifyOptions options;
    options.kladder = {16, 32, 64, 128};
    options.affinity_ts = {0.25, 0.5, 0.75};
    const FlatnessReport report = theorem_a_certify(
        v, flag, {{"flat", dual, half_square}, {"translate", dual, dual_up}}, options);

    const PairReport& flat = report.pairs[0];
    s.expect(!flat.translation, "generic pair is not a translation");
    s.expect(flat.affinity_extrapolated <= 1e-2,
             "extrapolated affinity " + fmt(flat.affinity_extrapolated) + " <= 1e-2");
    for (std::size_t i = 0; i + 1 < flat.affinity.size(); ++i)
        s.expect(flat.affinity[i + 1].residual < flat.affinity[i].residual,
                 "affinity residual decreasing at rung " + std::to_string(i));
    const PairReport& translate = report.pairs[1];
    s.expect(translate.translation, "shifted pair detected as translation");
    double worst_k = 0.0;
    for (const AffinityPerK& row : translate.affinity) worst_k = std::max(worst_k, row.residual);
    s.expect(worst_k <= 1e-12, "translation affinity " + fmt(worst_k) + " <= 1e-12 at every k");
    s.expect(report.verdict, "certifier verdict");
    s.note("extrap " + fmt(flat.affinity_extrapolated) + ", translation per-k " + fmt(worst_k));
    return s.out;
}

// ------------------------------------------------------------------ AC6
Outcome ac6() {
    Scorecard s;
    const Variety v = Variety::parse("p1:1");
    const GridPtr grid = Grid::make(okounkov_body(v, FlagSpec::coordinate(1), 2), 512);
    const ConvexGridFunction zero(GridFunction::constant(grid, 0.0));
    const ConvexGridFunction linear(GridFunction::sample(grid, [](double x) { return x; }));
    const ConvexGridFunction half_square(
        GridFunction::sample(grid, [](double x) { return 0.5 * x * x; }));
    const ConvexGridFunction dual = fs_dual_on(v, grid);
    const ConvexGridFunction c03(GridFunction::constant(grid, 0.3));
    const ConvexGridFunction xmh(
        GridFunction::sample(grid, [](double x) { return x - 0.5; }));

    const std::vector<std::pair<ConvexGridFunction, ConvexGridFunction>> pairs{
        {zero, linear}, {half_square, dual}, {zero, half_square}};

    double linearity = 0.0, finsler = 0.0;
    for (const auto& [u0, u1] : pairs) {
        const GeodesicPath path = mabuchi_geodesic(u0, u1);
        for (double p : {1.0, 2.0, 3.0}) {
            const double d01 = model_distance(u0.f(), u1.f(), p);
            for (int i = 0; i <= 20; ++i)
                for (int j = i + 1; j <= 20; ++j) {
                    const double si = i / 20.0, tj = j / 20.0;
                    linearity = std::max(
                        linearity, std::abs(model_distance(path.values_at(si),
                                                           path.values_at(tj), p) -
                                            (tj - si) * d01));
                }
            finsler = std::max(finsler, std::abs(finsler_length(path, p) - d01));
        }
    }
    s.expect(linearity <= 1e-12, "distance linearity " + fmt(linearity) + " <= 1e-12");
    s.expect(finsler <= 1e-3, "Finsler length residual " + fmt(finsler) + " <= 1e-3");

    const GeodesicPath g1 = mabuchi_geodesic(zero, linear);
    const GeodesicPath g2 = mabuchi_geodesic(half_square, dual);
    const GeodesicPath g3 = mabuchi_geodesic(zero, half_square);
    double busemann = 0.0;
    for (double p : {1.0, 2.0, 3.0}) {
        busemann = std::min(busemann, busemann_test(g1, g2, p));
        busemann = std::min(busemann, busemann_test(g2, g3, p));
        busemann = std::min(busemann, busemann_test(g1, g3, p));
    }
    s.expect(busemann >= -1e-9, "Busemann second differences " + fmt(busemann) + " >= -1e-9");

    // Triangles at p=2, including the exact Pythagoras triple.
    const double t1 = cat0_flatness_test(zero, xmh, c03, 2.0);
    const double t2 = cat0_flatness_test(zero, linear, half_square, 2.0);
    const ConvexGridFunction halfx(GridFunction::sample(grid, [](double x) { return 0.5 * x; }));
    const double t3 = cat0_flatness_test(zero, halfx, linear, 2.0);
    const double cat0 = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    s.expect(cat0 <= 1e-9, "CAT(0) comparison gap " + fmt(cat0) + " within 1e-9");
    s.note("linearity " + fmt(linearity) + ", finsler " + fmt(finsler) + ", busemann " +
           fmt(busemann) + ", cat0 " + fmt(cat0));
    return s.out;
}

// ------------------------------------------------------------------ AC7
Outcome ac7() {
    Scorecard s;
    const GridPtr grid = Grid::make(Polytope::unit_interval(), 512);
    const ConvexGridFunction zero(GridFunction::constant(grid, 0.0));
    const ConvexGridFunction linear(GridFunction::sample(grid, [](double x) { return x; }));
    const GeodesicPath hinge = d1_alternative_geodesic(grid);
    const GeodesicPath mabuchi = mabuchi_geodesic(zero, linear);

    // Unit speed at kink-aligned times t = (i/16)^2 (hinge at a panel edge).
    const double d01 = model_distance(zero.f(), linear.f(), 1.0);
    double unit_speed = 0.0;
    for (int i = 0; i <= 16; ++i)
        for (int j = i + 1; j <= 16; ++j) {
            const double si = (i / 16.0) * (i / 16.0), tj = (j / 16.0) * (j / 16.0);
            unit_speed = std::max(
                unit_speed, std::abs(model_distance(hinge.values_at(si), hinge.values_at(tj),
                                                    1.0) -
                                     (tj - si) * d01));
        }
    s.expect(unit_speed <= 1e-9, "hinge unit speed " + fmt(unit_speed) + " <= 1e-9");

    const double gap = model_distance(hinge.values_at(0.5), mabuchi.values_at(0.5), 1.0);
    s.expect(gap >= 0.03, "d_1 separation at t=1/2: " + fmt(gap) + " >= 0.03");

    const std::vector<std::pair<ConvexGridFunction, ConvexGridFunction>> pairs{{zero, linear}};
    const BicombingReport broken = bicombing_check(BicombingSelector::hinge_demo(), pairs, 1.0);
    const BicombingReport good = bicombing_check(BicombingSelector::mabuchi(), pairs, 1.0);
    s.expect(broken.symmetry_residual > 1e-3, "hinge selector fails symmetry (residual " +
                                                  fmt(broken.symmetry_residual) + ")");
    s.expect(good.symmetry_residual == 0.0, "Mabuchi selector symmetric exactly");
    s.note("unit speed " + fmt(unit_speed) + ", gap " + fmt(gap) + ", broken symmetry " +
           fmt(broken.symmetry_residual));
    return s.out;
}

// ------------------------------------------------------------------ AC8
Outcome ac8() {
    Scorecard s;
    const GridPtr grid = Grid::make(Polytope::unit_interval(), 512);
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> quad(0.2, 1.0), lin(-1.0, 1.0), off(-0.5, 0.5);
    auto draw = [&] {
        const double a = quad(rng), b = lin(rng), c = off(rng);
        return ConvexGridFunction(
            GridFunction::sample(grid, [=](double x) { return a * x * x + b * x + c; }));
    };
    double min_gap = 1e300, worst_affine = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const ConvexGridFunction u0 = draw(), u1 = draw();
        const SeparatorResult sep = separator_search(u0.f(), u1.f());
        s.expect(sep.separated, "pair " + std::to_string(trial) + " separated");
        s.expect(sep.gap >= 1e-6, "pair " + std::to_string(trial) + " gap " + fmt(sep.gap));
        min_gap = std::min(min_gap, sep.gap);

        const GeodesicPath path = mabuchi_geodesic(u0, u1);
        const double e0 = affine_functional(sep.density, u0.f());
        const double e1 = affine_functional(sep.density, u1.f());
        for (int i = 0; i <= 40; ++i) {
            const double t = i / 40.0;
            const double et = affine_functional(sep.density, path.values_at(t));
            worst_affine = std::max(worst_affine, std::abs(et - ((1.0 - t) * e0 + t * e1)));
        }
    }
    s.expect(worst_affine <= 1e-12,
             "pullback affinity residual " + fmt(worst_affine) + " <= 1e-12");
    s.note("min gap " + fmt(min_gap) + ", affinity " + fmt(worst_affine));
    return s.out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        const char* blurb;
        double time_limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> suite{
        {"AC1", "Okounkov bodies exact, volume identities", 30.0, ac1},
        {"AC2", "Gram matches the factorial formula", 30.0, ac2},
        {"AC3", "Chebyshev levels converge to the Legendre dual", 120.0, ac3},
        {"AC4", "translation equivariance of levels", 10.0, ac4},
        {"AC5", "level affinity along a Mabuchi geodesic", 300.0, ac5},
        {"AC6", "flat model geometry (linearity, Finsler, Busemann, CAT(0))", 120.0, ac6},
        {"AC7", "two d_1 geodesics and the bicombing check", 30.0, ac7},
        {"AC8", "separating affine functionals on seeded pairs", 30.0, ac8},
    };

    int failures = 0;
    for (const Criterion& c : suite) {
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > c.time_limit_s) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        if (!out.pass) ++failures;
        std::printf("%s %s  [%5.1fs/%g s]  %s — %s\n", c.name, out.pass ? "PASS" : "FAIL",
                    elapsed, c.time_limit_s, c.blurb, out.detail.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, suite.size());
    return failures == 0 ? 0 : 1;
}
