#pragma once
// Run manifests.  The deterministic core (artifact version, config hash,
// seed, tolerance snapshot) is embedded in every artifact; wall-clock and
// per-stage timings go to a sidecar manifest.json, which is the one
// deliberately non-reproducible file a run writes.

#include "oklab/cli/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oklab {

// 64-bit FNV-1a of a byte string, and its fixed-width hex form.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

struct RunManifest {
    std::string artifact_version;  // kArtifactVersion of the writing build
    std::string config_hash;       // fnv1a64_hex of the canonical config dump
    std::uint64_t seed = 0;
};

RunManifest make_manifest(const ExperimentConfig& cfg);

// {"artifact_version", "config_hash", "seed", "tolerances": {criterion: {op, bound}}}
nlohmann::json manifest_to_json(const RunManifest& m);

// Snapshot of the shipped tolerance table.
nlohmann::json tolerance_snapshot_json();

// Stage timing collector for the sidecar.
struct StageTimings {
    std::vector<std::pair<std::string, double>> stages;  // label -> seconds
    void add(const std::string& label, double seconds) { stages.emplace_back(label, seconds); }
    nlohmann::json to_json(const RunManifest& m) const;
};

}  // namespace oklab
