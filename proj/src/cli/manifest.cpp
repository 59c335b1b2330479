#include "oklab/cli/manifest.hpp"

#include "oklab/tolerances.hpp"

#include <cstdio>

namespace oklab {

const std::vector<ToleranceRule>& tolerance_table() {
    static const std::vector<ToleranceRule> table{
        // exact identities recorded as 1 (holds) / 0 (violated)
        {"body-volume-identity", ToleranceOp::GreaterEq, 1.0},
        // quadrature levels vs exact factorial norms
        {"level-relative-error", ToleranceOp::LessEq, 1e-10},
        // transform sup-deviation from the closed-form limit at k = 64,
        // measured on the inner 80% of the body
        {"transform-sup-k64", ToleranceOp::LessEq, 0.06},
        // extrapolated transform deviation from the closed-form limit
        {"transform-extrapolated", ToleranceOp::LessEq, 5e-3},
        // rooftop energy identity vs the d_1 distance
        {"rooftop-identity", ToleranceOp::AbsLessEq, 1e-10},
        // d_p along the geodesic vs |t - s| d(u0, u1)
        {"linearity", ToleranceOp::LessEq, 1e-12},
        // level affinity along geodesics
        {"affinity-extrapolated", ToleranceOp::LessEq, 1e-2},
        {"affinity-translation", ToleranceOp::LessEq, 1e-12},
        // Finsler length vs distance
        {"finsler", ToleranceOp::LessEq, 1e-3},
        // second differences of t -> d(a(t), b(t))
        {"busemann-min", ToleranceOp::GreaterEq, -1e-9},
        // comparison-triangle median gap
        {"cat0-gap", ToleranceOp::AbsLessEq, 1e-9},
        // separating functional gap and its affinity along the path
        {"separator-gap", ToleranceOp::GreaterEq, 1e-6},
        {"pullback-affinity", ToleranceOp::LessEq, 1e-12},
        // hinge family: unit speed at kink-aligned times, d_1 gap at t = 1/2,
        // and bicombing symmetry of the selected paths
        {"hinge-unit-speed", ToleranceOp::LessEq, 1e-9},
        {"hinge-separation", ToleranceOp::GreaterEq, 0.03},
        {"bicombing-symmetry", ToleranceOp::LessEq, 1e-12},
    };
    return table;
}

const ToleranceRule* find_tolerance(const std::string& criterion) {
    for (const ToleranceRule& r : tolerance_table())
        if (criterion == r.criterion) return &r;
    return nullptr;
}

bool tolerance_holds(const ToleranceRule& rule, double value) {
    switch (rule.op) {
        case ToleranceOp::LessEq: return value <= rule.bound;
        case ToleranceOp::GreaterEq: return value >= rule.bound;
        case ToleranceOp::AbsLessEq: return value >= -rule.bound && value <= rule.bound;
    }
    return false;
}

std::string tolerance_to_string(const ToleranceRule& rule) {
    char buf[64];
    const char* op = rule.op == ToleranceOp::LessEq      ? "<="
                     : rule.op == ToleranceOp::GreaterEq ? ">="
                                                         : "|.| <=";
    std::snprintf(buf, sizeof buf, "%s %.6g", op, rule.bound);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

RunManifest make_manifest(const ExperimentConfig& cfg) {
    RunManifest m;
    m.artifact_version = kArtifactVersion;
    m.config_hash = fnv1a64_hex(config_to_json(cfg).dump());
    m.seed = cfg.seed;
    return m;
}

nlohmann::json tolerance_snapshot_json() {
    nlohmann::json t;
    for (const ToleranceRule& r : tolerance_table()) {
        const char* op = r.op == ToleranceOp::LessEq      ? "le"
                         : r.op == ToleranceOp::GreaterEq ? "ge"
                                                          : "abs-le";
        t[r.criterion] = {{"op", op}, {"bound", r.bound}};
    }
    return t;
}

nlohmann::json manifest_to_json(const RunManifest& m) {
    nlohmann::json j;
    j["artifact_version"] = m.artifact_version;
    j["config_hash"] = m.config_hash;
    j["seed"] = m.seed;
    j["tolerances"] = tolerance_snapshot_json();
    return j;
}

nlohmann::json StageTimings::to_json(const RunManifest& m) const {
    nlohmann::json j;
    j["artifact_version"] = m.artifact_version;
    j["config_hash"] = m.config_hash;
    double total = 0.0;
    j["stages"] = nlohmann::json::array();
    for (const auto& [label, seconds] : stages) {
        j["stages"].push_back({{"stage", label}, {"seconds", seconds}});
        total += seconds;
    }
    j["wall_clock_seconds"] = total;
    return j;
}

}  // namespace oklab
