#include "oklab/cli/config.hpp"

#include "oklab/okounkov/variety.hpp"
#include "oklab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace oklab {

namespace {

const std::set<std::string> kExperiments{"body",     "chebyshev", "geodesic",
                                         "flatness", "busemann",  "d1demo"};
const std::set<std::string> kFlagKinds{"coordinate", "p1-point", "random-linear"};

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
    throw ConfigError(pointer, what);
}

const nlohmann::json* field(const nlohmann::json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

int require_int(const nlohmann::json& v, const std::string& ptr, int lo) {
    if (!v.is_number_integer()) fail(ptr, "expected an integer");
    const long long x = v.get<long long>();
    if (x < lo) fail(ptr, "must be >= " + std::to_string(lo));
    if (x > 1'000'000) fail(ptr, "implausibly large");
    return static_cast<int>(x);
}

double require_finite(const nlohmann::json& v, const std::string& ptr) {
    if (!v.is_number()) fail(ptr, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(ptr, "must be finite");
    return x;
}

std::string require_string(const nlohmann::json& v, const std::string& ptr) {
    if (!v.is_string()) fail(ptr, "expected a string");
    return v.get<std::string>();
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"zero", "fs-dual", "half-square", "linear"};
    return names;
}

ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
    if (!j.is_object()) fail("", "config must be a JSON object");
    ExperimentConfig cfg;

    const nlohmann::json* v = field(j, "experiment");
    if (!v) fail("/experiment", "missing (one of body, chebyshev, geodesic, flatness, busemann, d1demo)");
    cfg.experiment = require_string(*v, "/experiment");
    if (!kExperiments.count(cfg.experiment))
        fail("/experiment", "unknown experiment '" + cfg.experiment + "'");

    if ((v = field(j, "variety"))) cfg.variety = require_string(*v, "/variety");
    int variety_dim = 1;
    try {
        variety_dim = Variety::parse(cfg.variety).dim();
    } catch (const std::exception& e) {
        fail("/variety", e.what());
    }

    if ((v = field(j, "flag"))) {
        if (!v->is_object()) fail("/flag", "expected an object {kind, ...}");
        if (const nlohmann::json* k = field(*v, "kind")) {
            cfg.flag_kind = require_string(*k, "/flag/kind");
            if (!kFlagKinds.count(cfg.flag_kind))
                fail("/flag/kind", "unknown flag kind '" + cfg.flag_kind + "'");
        }
        if (const nlohmann::json* z = field(*v, "z0")) {
            cfg.flag_z0 = require_string(*z, "/flag/z0");
            try {
                (void)rational_from_string(cfg.flag_z0);
            } catch (const std::exception& e) {
                fail("/flag/z0", e.what());
            }
        }
    }
    if (cfg.flag_kind == "p1-point" && variety_dim != 1)
        fail("/flag/kind", "p1-point flags live on curves");
    if (cfg.experiment != "body" && cfg.experiment != "d1demo" && cfg.flag_kind != "coordinate")
        fail("/flag/kind", "the " + cfg.experiment +
                               " pipeline runs the invariant-weight level computation, "
                               "which requires the coordinate flag");

    if ((v = field(j, "weight"))) {
        if (!v->is_object()) fail("/weight", "expected an object {kind, shift}");
        if (const nlohmann::json* k = field(*v, "kind")) {
            cfg.weight_kind = require_string(*k, "/weight/kind");
            if (cfg.weight_kind != "fs")
                fail("/weight/kind", "unknown weight kind '" + cfg.weight_kind + "'");
        }
        if (const nlohmann::json* s = field(*v, "shift"))
            cfg.weight_shift = require_finite(*s, "/weight/shift");
    }

    if ((v = field(j, "kmax"))) cfg.kmax = require_int(*v, "/kmax", 1);

    if ((v = field(j, "kladder"))) {
        if (!v->is_array() || v->empty()) fail("/kladder", "expected a non-empty array of k");
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string ptr = "/kladder/" + std::to_string(i);
            const int k = require_int((*v)[i], ptr, 1);
            if (!cfg.kladder.empty() && k <= cfg.kladder.back())
                fail(ptr, "ladder must be strictly increasing");
            cfg.kladder.push_back(k);
        }
    }
    if (cfg.kladder.empty())
        cfg.kladder = variety_dim == 1 ? std::vector<int>{16, 32, 64, 128}
                                       : std::vector<int>{8, 16, 32, 64};

    cfg.grid_resolution = variety_dim == 1 ? 512 : 96;
    if ((v = field(j, "grid_resolution")))
        cfg.grid_resolution = require_int(*v, "/grid_resolution", 4);
    if (cfg.experiment == "d1demo" && cfg.grid_resolution % 16 != 0)
        fail("/grid_resolution", "the hinge demo aligns kinks with quadrature panels; "
                                 "use a multiple of 16");

    if ((v = field(j, "t_samples"))) cfg.t_samples = require_int(*v, "/t_samples", 2);

    if ((v = field(j, "p_set"))) {
        if (!v->is_array() || v->empty()) fail("/p_set", "expected a non-empty array of p >= 1");
        cfg.p_set.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string ptr = "/p_set/" + std::to_string(i);
            const double p = require_finite((*v)[i], ptr);
            if (p < 1.0) fail(ptr, "must be >= 1");
            cfg.p_set.push_back(p);
        }
    }

    if ((v = field(j, "seed"))) {
        if (!v->is_number_unsigned() && !v->is_number_integer()) fail("/seed", "expected an unsigned integer");
        const long long s = v->get<long long>();
        if (s < 0) fail("/seed", "must be nonnegative");
        cfg.seed = static_cast<std::uint64_t>(s);
    }

    if ((v = field(j, "pairs"))) {
        if (!v->is_array()) fail("/pairs", "expected an array of {id, u0, u1[, shift]}");
        const auto& names = catalog_names();
        for (std::size_t i = 0; i < v->size(); ++i) {
            const std::string base = "/pairs/" + std::to_string(i);
            const nlohmann::json& pj = (*v)[i];
            if (!pj.is_object()) fail(base, "expected an object {id, u0, u1[, shift]}");
            PairSpec p;
            const nlohmann::json* f = field(pj, "id");
            if (!f) fail(base + "/id", "missing");
            p.id = require_string(*f, base + "/id");
            if (p.id.empty()) fail(base + "/id", "must be non-empty");
            for (const char* side : {"u0", "u1"}) {
                f = field(pj, side);
                if (!f) fail(base + "/" + side, "missing");
                const std::string name = require_string(*f, base + "/" + side);
                if (std::find(names.begin(), names.end(), name) == names.end())
                    fail(base + "/" + side, "unknown model point '" + name + "'");
                (side[1] == '0' ? p.u0 : p.u1) = name;
            }
            if ((f = field(pj, "shift"))) p.shift = require_finite(*f, base + "/shift");
            cfg.pairs.push_back(std::move(p));
        }
    }
    const bool needs_pairs = cfg.experiment == "geodesic" || cfg.experiment == "flatness" ||
                             cfg.experiment == "busemann";
    if (needs_pairs && cfg.pairs.empty())
        fail("/pairs", "the " + cfg.experiment + " pipeline needs at least one pair");

    // Reject fields we would silently ignore: typos should not validate.
    static const std::set<std::string> known{"experiment", "variety",         "flag",
                                             "weight",     "kmax",            "kladder",
                                             "grid_resolution", "t_samples",  "p_set",
                                             "seed",       "pairs"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) fail("/" + it.key(), "unknown field");

    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = cfg.experiment;
    j["variety"] = cfg.variety;
    j["flag"] = {{"kind", cfg.flag_kind}};
    if (cfg.flag_kind == "p1-point") j["flag"]["z0"] = cfg.flag_z0;
    j["weight"] = {{"kind", cfg.weight_kind}, {"shift", cfg.weight_shift}};
    j["kmax"] = cfg.kmax;
    j["kladder"] = cfg.kladder;
    j["grid_resolution"] = cfg.grid_resolution;
    j["t_samples"] = cfg.t_samples;
    j["p_set"] = cfg.p_set;
    j["seed"] = cfg.seed;
    j["pairs"] = nlohmann::json::array();
    for (const PairSpec& p : cfg.pairs)
        j["pairs"].push_back({{"id", p.id}, {"u0", p.u0}, {"u1", p.u1}, {"shift", p.shift}});
    return j;
}

}  // namespace oklab
