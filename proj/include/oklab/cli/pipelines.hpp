#pragma once
// The experiment pipelines behind the CLI subcommands.  Each pipeline builds
// its artifacts in memory, evaluates its check rows against the shipped
// tolerance table, and only then writes files (single writer, at stage end).

#include "oklab/cli/config.hpp"

#include <string>
#include <vector>

namespace oklab {

struct PipelineResult {
    // 0 = all checks met, 2 = a recorded check violates its tolerance,
    // (configuration errors throw before artifacts are written).
    int exit_code = 0;
    std::vector<std::string> artifacts;  // paths written, primary first
    std::vector<std::string> summary;    // one line per check plus totals
};

// Runs cfg.experiment, writing the primary artifact `primary_name` (JSON) and
// its companions into `out_dir` (created if missing).  `with_svg` adds the
// plot artifacts.
PipelineResult run_experiment(const ExperimentConfig& cfg, const std::string& out_dir,
                              const std::string& primary_name, bool with_svg);

}  // namespace oklab
