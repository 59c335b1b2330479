#pragma once
// Linear flags on projective space: an invertible rational matrix carries the
// standard coordinate flag to the user's flag.  In the transformed coordinates
// W (with Z = matrix * W) the flag is {W1 = 0} ⊃ {W1 = W2 = 0} and the flag
// point is the origin of the marked chart, so valuations reduce to
// lexicographic minima after an exact substitution.

#include "oklab/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace oklab {

class FlagSpec {
  public:
    using Matrix = std::array<std::array<Rational, 3>, 3>;

    // Standard coordinate flag: identity matrix, chart 0.
    static FlagSpec coordinate(int n);
    // Seeded random linear flag: integer entries in [-3, 3], resampled until
    // invertible.  Deterministic for a fixed seed.
    static FlagSpec random_linear(int n, std::uint64_t seed);
    // Flag point z = z0 on the line (local coordinate w = z - z0).
    static FlagSpec p1_point(const Rational& z0);
    // General constructor; validates invertibility and chart range.
    static FlagSpec from_matrix(int n, Matrix m, int chart = 0);

    int dim() const { return n_; }
    int chart() const { return chart_; }
    const Matrix& matrix() const { return m_; }

    // True for the identity matrix with chart 0 (the torus-invariant flag).
    bool is_coordinate() const;
    Rational det() const;
    // Exact inverse of the coordinate change (adjugate over determinant).
    Matrix inverse_matrix() const;
    std::string describe() const;

  private:
    FlagSpec(int n, Matrix m, int chart);

    int n_;
    Matrix m_;
    int chart_;
};

}  // namespace oklab
