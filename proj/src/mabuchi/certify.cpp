#include "oklab/mabuchi/certify.hpp"

#include "oklab/errors.hpp"
#include "oklab/hermitian/chebyshev.hpp"
#include "oklab/numeric.hpp"
#include "oklab/okounkov/body.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oklab {

namespace {

int section_degree_of(const Variety& variety, int k) {
    if (variety.kind() == VarietyKind::ProjSpace) return k * variety.degree();
    const int d0 = static_cast<int>(
        std::lround(to_double(variety.moment_polytope().bbox_max(0))));
    const int d1 = static_cast<int>(
        std::lround(to_double(variety.moment_polytope().bbox_max(1))));
    return k * std::max(d0, d1);
}

std::vector<double> level_values(const Variety& variety, const SectionBasis& basis,
                                 const ConvexGridFunction& u, const QuadratureRule& rule,
                                 const std::string& id) {
    const WeightFunction w = WeightFunction::invariant(variety, SymbolFunction::pl_conjugate(u), id);
    return chebyshev_level(gram_matrix(basis.k, basis, w, rule)).values;
}

// Least-squares intercept of residual_k ~ a + b log k / k.
double extrapolate_intercept(const std::vector<AffinityPerK>& data) {
    const std::size_t n = data.size();
    if (n == 0) return 0.0;
    if (n == 1) return data[0].residual;
    double s11 = static_cast<double>(n), s12 = 0.0, s22 = 0.0, b1 = 0.0, b2 = 0.0;
    for (const AffinityPerK& row : data) {
        const double t = std::log(static_cast<double>(row.k)) / row.k;
        s12 += t;
        s22 += t * t;
        b1 += row.residual;
        b2 += t * row.residual;
    }
    const double det = s11 * s22 - s12 * s12;
    return (s22 * b1 - s12 * b2) / det;
}

}  // namespace

FlatnessReport theorem_a_certify(const Variety& variety, const FlagSpec& flag,
                                 const std::vector<CertifyPair>& pairs,
                                 const CertifyOptions& options) {
    if (!flag.is_coordinate())
        throw UnsupportedCombinationError(
            "the certifier drives the invariant-weight level pipeline, which is "
            "diagonal for the coordinate flag only");

    CertifyOptions opts = options;
    if (opts.kladder.empty())
        opts.kladder = variety.dim() == 1 ? std::vector<int>{16, 32, 64, 128}
                                          : std::vector<int>{8, 16, 32, 64};
    if (opts.affinity_ts.empty())
        for (int i = 0; i <= 40; ++i) opts.affinity_ts.push_back(i / 40.0);

    const Polytope body = okounkov_body(variety, flag, 2);

    FlatnessReport report;
    report.model = "L^p on Conv(body), normalized by V = vol(body)";
    report.variety_id = variety.id();
    report.flag_note = flag.describe();
    report.kladder = opts.kladder;
    report.p_set = opts.p_set;
    report.verdict = true;

    for (const CertifyPair& pair : pairs) {
        if (!(pair.u0.grid()->polytope() == body) || !(pair.u1.grid()->polytope() == body))
            throw std::invalid_argument(
                "polytope mismatch between the flag body and the pair '" + pair.id + "'");
        require_same_grid(pair.u0.f(), pair.u1.f(), "theorem_a_certify pair " + pair.id);

        PairReport pr;
        pr.id = pair.id;
        double dmin = 1e300, dmax = -1e300;
        for (std::size_t i = 0; i < pair.u0.size(); ++i) {
            const double d = pair.u1[i] - pair.u0[i];
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
        pr.translation = (dmax - dmin) <= 1e-12;
        pr.degenerate = pr.translation && std::max(std::abs(dmin), std::abs(dmax)) <= 1e-12;

        const GeodesicPath path = mabuchi_geodesic(pair.u0, pair.u1);
        const FlatnessTolerances& tol = report.tolerances;

        // (1) Hypothesis: levels are affine along the geodesic.
        for (int k : opts.kladder) {
            const SectionBasis basis = section_basis(variety, flag, k);
            const int cap = section_degree_of(variety, k);
            const QuadratureRule rule =
                QuadratureRule::custom(cap, 2 * cap + opts.radial_slack, 0);
            const std::vector<double> v0 =
                level_values(variety, basis, pair.u0, rule, pair.id + "@t=0");
            const std::vector<double> v1 =
                level_values(variety, basis, pair.u1, rule, pair.id + "@t=1");
            std::vector<double> residual_at(opts.affinity_ts.size(), 0.0);
            parallel_for(opts.affinity_ts.size(), [&](std::size_t ti) {
                const double t = opts.affinity_ts[ti];
                const std::vector<double> vt =
                    level_values(variety, basis, path.at(t), rule, pair.id + "@t");
                double r = 0.0;
                for (std::size_t i = 0; i < vt.size(); ++i)
                    r = std::max(r, std::abs(vt[i] - ((1.0 - t) * v0[i] + t * v1[i])));
                residual_at[ti] = r;
            });
            AffinityPerK row;
            row.k = k;
            row.residual = *std::max_element(residual_at.begin(), residual_at.end());
            pr.affinity.push_back(row);
        }
        pr.affinity_extrapolated = extrapolate_intercept(pr.affinity);

        // (2) Conclusion: the model is metrically flat along the path.
        std::vector<GridFunction> samples;
        samples.reserve(static_cast<std::size_t>(opts.distance_samples));
        for (int i = 0; i < opts.distance_samples; ++i)
            samples.push_back(path.values_at(static_cast<double>(i) / (opts.distance_samples - 1)));
        const ConvexGridFunction roof(pointwise_max(pair.u0.f(), pair.u1.f()),
                                      std::max(pair.u0.tolerance(), pair.u1.tolerance()));
        const GeodesicPath still = mabuchi_geodesic(roof, roof);
        pr.busemann_min = 1e300;
        for (double p : opts.p_set) {
            const double d01 = model_distance(pair.u0.f(), pair.u1.f(), p);
            double lin = 0.0;
            for (int i = 0; i < opts.distance_samples; ++i)
                for (int j = i + 1; j < opts.distance_samples; ++j) {
                    const double frac =
                        static_cast<double>(j - i) / (opts.distance_samples - 1);
                    lin = std::max(lin, std::abs(model_distance(samples[static_cast<std::size_t>(i)],
                                                                samples[static_cast<std::size_t>(j)],
                                                                p) -
                                                 frac * d01));
                }
            pr.linearity_residual = std::max(pr.linearity_residual, lin);
            std::vector<std::string> fw;
            const double fl =
                finsler_length(path, p, opts.finsler_resolution, opts.fd_width, &fw);
            pr.finsler_residual = std::max(pr.finsler_residual, std::abs(fl - d01));
            for (const std::string& w : fw) pr.notes.push_back("finsler p=" + std::to_string(p) + ": " + w);
            pr.busemann_min = std::min(pr.busemann_min, busemann_test(path, still, p, 101));
        }
        pr.cat0_gap = cat0_flatness_test(pair.u0, pair.u1, roof, 2.0);

        // (3) Mechanism: a separating functional, affine along the path.
        if (!pr.degenerate) {
            SeparatorResult sep =
                separator_search(pair.u0.f(), pair.u1.f(), opts.separator_max_power);
            pr.separator_density = sep.density_id;
            pr.separator_gap = sep.gap;
            if (sep.separated) {
                const double e0 = affine_functional(sep.density, pair.u0.f());
                const double e1 = affine_functional(sep.density, pair.u1.f());
                for (double t : opts.affinity_ts) {
                    const double et = affine_functional(sep.density, path.values_at(t));
                    pr.pullback_affinity = std::max(
                        pr.pullback_affinity, std::abs(et - ((1.0 - t) * e0 + t * e1)));
                }
            }
        } else {
            pr.separator_density = "none (inputs equal)";
        }

        double max_per_k = 0.0;
        for (const AffinityPerK& row : pr.affinity) max_per_k = std::max(max_per_k, row.residual);
        const bool affinity_ok = pr.translation ? max_per_k <= tol.affinity_translation
                                                : pr.affinity_extrapolated <= tol.affinity_extrapolated;
        const bool separator_ok =
            pr.degenerate || (pr.separator_gap >= tol.separator_gap &&
                              pr.pullback_affinity <= tol.pullback_affinity);
        pr.pass = affinity_ok && pr.linearity_residual <= tol.linearity &&
                  pr.finsler_residual <= tol.finsler && pr.busemann_min >= tol.busemann_min &&
                  std::abs(pr.cat0_gap) <= tol.cat0_gap && separator_ok;
        if (!affinity_ok) pr.notes.push_back("level affinity outside tolerance");
        if (!separator_ok) pr.notes.push_back("separating functional missing or not affine");
        report.verdict = report.verdict && pr.pass;
        report.pairs.push_back(std::move(pr));
    }
    return report;
}

std::string flatness_report_json(const FlatnessReport& report) {
    nlohmann::json j;
    j["model"] = report.model;
    j["variety"] = report.variety_id;
    j["flag"] = report.flag_note;
    j["kladder"] = report.kladder;
    j["p_set"] = report.p_set;
    j["tolerances"] = {{"affinity_extrapolated", report.tolerances.affinity_extrapolated},
                       {"affinity_translation", report.tolerances.affinity_translation},
                       {"linearity", report.tolerances.linearity},
                       {"finsler", report.tolerances.finsler},
                       {"busemann_min", report.tolerances.busemann_min},
                       {"cat0_gap", report.tolerances.cat0_gap},
                       {"separator_gap", report.tolerances.separator_gap},
                       {"pullback_affinity", report.tolerances.pullback_affinity}};
    j["pairs"] = nlohmann::json::array();
    for (const PairReport& pr : report.pairs) {
        nlohmann::json per_k = nlohmann::json::array();
        for (const AffinityPerK& row : pr.affinity)
            per_k.push_back({{"k", row.k}, {"residual", row.residual}});
        j["pairs"].push_back(
            {{"id", pr.id},
             {"degenerate", pr.degenerate},
             {"translation", pr.translation},
             {"affinity", {{"per_k", per_k}, {"extrapolated", pr.affinity_extrapolated}}},
             {"linearity", pr.linearity_residual},
             {"finsler_residual", pr.finsler_residual},
             {"busemann_min", pr.busemann_min},
             {"cat0_gap", pr.cat0_gap},
             {"separator",
              {{"density_id", pr.separator_density},
               {"gap", pr.separator_gap},
               {"pullback_affinity", pr.pullback_affinity}}},
             {"pass", pr.pass},
             {"notes", pr.notes}});
    }
    j["verdict"] = report.verdict ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string flatness_report_csv(const FlatnessReport& report) {
    std::string out =
        "pair,translation,affinity_extrapolated,linearity,finsler,busemann_min,cat0_gap,"
        "separator_gap,pullback,pass\n";
    char buf[256];
    for (const PairReport& pr : report.pairs) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.6e,%.6e,%.6e,%.6e,%.6e,%.6e,%.6e,%s\n",
                      pr.id.c_str(), pr.translation ? 1 : 0, pr.affinity_extrapolated,
                      pr.linearity_residual, pr.finsler_residual, pr.busemann_min, pr.cat0_gap,
                      pr.separator_gap, pr.pullback_affinity, pr.pass ? "pass" : "fail");
        out += buf;
    }
    return out;
}

}  // namespace oklab
