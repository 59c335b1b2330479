#pragma once
// Experiment configurations: JSON in, validated typed config out.  Validation
// failures carry the JSON-pointer path of the offending field so the CLI can
// report exactly what to fix (and exit 1 before any artifact is written).

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oklab {

struct ConfigError : std::invalid_argument {
    std::string pointer;  // JSON pointer of the offending field
    ConfigError(std::string ptr, const std::string& what)
        : std::invalid_argument(ptr + ": " + what), pointer(std::move(ptr)) {}
};

struct PairSpec {
    std::string id;
    std::string u0;      // catalog name, see `catalog_names()`
    std::string u1;      // catalog name
    double shift = 0.0;  // added to u1 (translate pairs)
};

struct ExperimentConfig {
    std::string experiment;  // body|chebyshev|geodesic|flatness|busemann|d1demo
    std::string variety = "p1:1";

    // Flag: coordinate | p1-point (rational z0) | random-linear (uses seed).
    std::string flag_kind = "coordinate";
    std::string flag_z0 = "1";

    // Weight: the invariant Fubini-Study weight, optionally shifted by a
    // constant (phi -> phi + shift).
    std::string weight_kind = "fs";
    double weight_shift = 0.0;

    int kmax = 5;                 // body: hull of k <= kmax graded points
    std::vector<int> kladder;     // chebyshev/flatness ladders
    int grid_resolution = 512;    // model grid subintervals per axis (96 on surfaces)
    int t_samples = 41;           // uniform t grid on [0,1]
    std::vector<double> p_set = {1.0, 2.0, 3.0};
    std::uint64_t seed = 0;       // random flags
    std::vector<PairSpec> pairs;  // geodesic/flatness/busemann endpoints
};

// Names accepted for pair endpoints: convex functions on the body grid.
const std::vector<std::string>& catalog_names();

// Parse + validate.  Throws ConfigError with the JSON-pointer path.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

// The canonical echo: every field materialized, defaults included.  Hashing
// and artifact embedding use this form, so config files that parse to the
// same experiment hash identically.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

}  // namespace oklab
