#pragma once
// Theorem-A style certification: for pairs of model points, check that the
// per-degree level values are affine along the linear geodesic (hypothesis)
// and that the model geometry is flat (conclusion): distance linearity,
// Finsler agreement, Busemann convexity, CAT(0) equality, and separating
// affine functionals.

#include "oklab/mabuchi/curvature.hpp"
#include "oklab/mabuchi/geodesic.hpp"
#include "oklab/mabuchi/separator.hpp"
#include "oklab/okounkov/flag.hpp"
#include "oklab/okounkov/variety.hpp"

#include <string>
#include <vector>

namespace oklab {

struct CertifyPair {
    std::string id;
    ConvexGridFunction u0, u1;
};

struct CertifyOptions {
    std::vector<int> kladder;        // empty = default ladder for the variety
    std::vector<double> affinity_ts; // empty = 41 uniform samples on [0,1]
    int distance_samples = 201;
    int finsler_resolution = 200;
    double fd_width = 1.0 / 400;
    std::vector<double> p_set = {1.0, 2.0, 3.0};
    int radial_slack = 40;           // radial nodes = 2 * section degree + slack
    int separator_max_power = 8;
};

struct FlatnessTolerances {
    double affinity_extrapolated = 1e-2;
    double affinity_translation = 1e-12;  // per-k bound for translation pairs
    double linearity = 1e-12;
    double finsler = 1e-3;
    double busemann_min = -1e-9;
    double cat0_gap = 1e-9;
    double separator_gap = 1e-6;
    double pullback_affinity = 1e-12;
};

struct AffinityPerK {
    int k = 0;
    double residual = 0.0;
};

struct PairReport {
    std::string id;
    bool degenerate = false;   // u0 == u1 within tolerance: trivially flat
    bool translation = false;  // u1 - u0 constant: affine at every finite k
    std::vector<AffinityPerK> affinity;
    double affinity_extrapolated = 0.0;
    double linearity_residual = 0.0;
    double finsler_residual = 0.0;
    double busemann_min = 0.0;
    double cat0_gap = 0.0;
    std::string separator_density;
    double separator_gap = 0.0;
    double pullback_affinity = 0.0;
    bool pass = false;
    std::vector<std::string> notes;
};

struct FlatnessReport {
    std::string model;  // records the candidate flat model (L^p choice)
    std::string variety_id;
    std::string flag_note;
    std::vector<int> kladder;
    std::vector<double> p_set;
    FlatnessTolerances tolerances;
    std::vector<PairReport> pairs;
    bool verdict = false;
};

// Runs the full per-pair sweep.  The flag must be the coordinate flag (the
// level pipeline is diagonal for invariant weights); every pair's grid must
// live on the flag's Okounkov body.
FlatnessReport theorem_a_certify(const Variety& variety, const FlagSpec& flag,
                                 const std::vector<CertifyPair>& pairs,
                                 const CertifyOptions& options = {});

// {pairs:[{id, affinity:{per_k, extrapolated}, linearity, busemann_min,
//  cat0_gap, separator:{density_id, gap}}], verdict} plus the model record.
std::string flatness_report_json(const FlatnessReport& report);
// One row per pair with the headline residuals.
std::string flatness_report_csv(const FlatnessReport& report);

}  // namespace oklab
