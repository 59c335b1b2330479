#pragma once
// Regular grids on polytopes: polytope-clipped lattice nodes with quadrature
// weights (composite Simpson/trapezoid in 1-D, boundary-corrected product
// trapezoid in 2-D).

#include "oklab/convex/polytope.hpp"
#include "oklab/rational.hpp"

#include <array>
#include <memory>
#include <vector>

namespace oklab {

class Grid {
  public:
    // m = number of subintervals per axis of the bounding box; nodes are the
    // lattice points that lie in the polytope (closed).
    static std::shared_ptr<const Grid> make(Polytope polytope, int m);

    int dim() const { return poly_.dim(); }
    int resolution() const { return m_; }
    const Polytope& polytope() const { return poly_; }

    std::size_t size() const { return nodes_.size(); }
    const std::vector<RPoint>& nodes_exact() const { return nodes_; }
    const std::vector<std::array<double, 2>>& nodes() const { return nodes_d_; }
    // Quadrature weights; their exact sum equals the polytope volume.
    const std::vector<double>& weights() const { return weights_; }
    double volume() const { return volume_d_; }
    const Rational& volume_exact() const { return volume_; }

    // Lattice index (i[,j]) of a node and the reverse lookup (-1 if the
    // lattice point falls outside the polytope).
    std::array<int, 2> lattice(std::size_t node) const { return lattice_[node]; }
    long node_at(int i, int j = 0) const;

    bool is_interior(std::size_t node) const { return interior_[node] != 0; }

    Rational coord_exact(int axis, int index) const {
        return poly_.bbox_min(axis) + step_[static_cast<std::size_t>(axis)] * index;
    }
    const Rational& step_exact(int axis) const { return step_[static_cast<std::size_t>(axis)]; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.m_ == b.m_ && a.poly_ == b.poly_;
    }

  private:
    Grid(Polytope p, int m);

    Polytope poly_;
    int m_;
    std::array<Rational, 2> step_{Rational(0), Rational(0)};
    std::vector<RPoint> nodes_;
    std::vector<std::array<double, 2>> nodes_d_;
    std::vector<double> weights_;
    std::vector<std::array<int, 2>> lattice_;
    std::vector<long> index_;  // (m+1)x(m+1) lattice -> node id or -1
    std::vector<char> interior_;
    Rational volume_;
    double volume_d_ = 0.0;
};

using GridPtr = std::shared_ptr<const Grid>;

}  // namespace oklab
