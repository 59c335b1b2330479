#pragma once
// The versioned tolerance table.  Every numerical certificate recorded in a
// shipped artifact names one of these criteria; `verify` re-checks recorded
// values against this build's bounds, so the bounds are a property of the
// build, not of any particular run configuration.

#include <cstddef>
#include <string>
#include <vector>

namespace oklab {

inline constexpr const char* kArtifactVersion = "1";

// How a recorded value is compared with the bound.
enum class ToleranceOp { LessEq, GreaterEq, AbsLessEq };

struct ToleranceRule {
    const char* criterion;
    ToleranceOp op;
    double bound;
};

// The shipped table, one row per check criterion.
const std::vector<ToleranceRule>& tolerance_table();

// Row lookup by criterion name; nullptr when unknown.
const ToleranceRule* find_tolerance(const std::string& criterion);

// True when `value` satisfies the rule.
bool tolerance_holds(const ToleranceRule& rule, double value);

// Human-readable comparison, e.g. "<= 1e-12".
std::string tolerance_to_string(const ToleranceRule& rule);

}  // namespace oklab
