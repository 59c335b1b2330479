#pragma once
// Error taxonomy: std::invalid_argument for precondition violations,
// std::domain_error subclasses for mathematical failures detected at runtime,
// std::runtime_error subclasses for numerical breakdowns.

#include <stdexcept>
#include <string>

namespace oklab {

// Two grid functions combined over different grids, or a function handed to
// an operation expecting a different grid.
struct GridMismatchError : std::invalid_argument {
    explicit GridMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Discrete convexity violated beyond tolerance.
struct NonConvexError : std::domain_error {
    explicit NonConvexError(const std::string& what) : std::domain_error(what) {}
};

// Symbol grows too slowly / conjugate diverges: the Legendre sweep hit the
// expansion cap with a boundary argmax at the node reported in the message.
struct GrowthViolationError : std::domain_error {
    explicit GrowthViolationError(const std::string& what) : std::domain_error(what) {}
};

// Cholesky pivot failure while factoring a Gram matrix; `index` is the
// 0-based position in the valuation-ordered basis where the pivot failed.
struct NumericalBreakdownError : std::runtime_error {
    int index;
    NumericalBreakdownError(const std::string& what, int idx)
        : std::runtime_error(what), index(idx) {}
};

// Variety/weight/flag combination the library does not support.
struct UnsupportedCombinationError : std::invalid_argument {
    explicit UnsupportedCombinationError(const std::string& what) : std::invalid_argument(what) {}
};

// Rank deficiency during graded-point elimination: the section space fails
// the one-dimensional leaf property, which the supported varieties never do —
// this is an internal error and is reported loudly.
struct LeafPropertyError : std::logic_error {
    explicit LeafPropertyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace oklab
