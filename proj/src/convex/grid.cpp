#include "oklab/convex/grid.hpp"

#include <stdexcept>

namespace oklab {

std::shared_ptr<const Grid> Grid::make(Polytope polytope, int m) {
    return std::shared_ptr<const Grid>(new Grid(std::move(polytope), m));
}

long Grid::node_at(int i, int j) const {
    if (i < 0 || i > m_ || j < 0 || j > (dim() == 2 ? m_ : 0)) return -1;
    return index_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim() == 2 ? m_ + 1 : 1) +
                  static_cast<std::size_t>(j)];
}

Grid::Grid(Polytope p, int m) : poly_(std::move(p)), m_(m) {
    if (m < 1) throw std::invalid_argument("Grid: resolution must be >= 1");

    for (int ax = 0; ax < poly_.dim(); ++ax)
        step_[static_cast<std::size_t>(ax)] = (poly_.bbox_max(ax) - poly_.bbox_min(ax)) / m;

    if (poly_.dim() == 1) {
        index_.assign(static_cast<std::size_t>(m_) + 1, -1);
        for (int i = 0; i <= m_; ++i) {
            RPoint q(coord_exact(0, i));
            index_[static_cast<std::size_t>(i)] = static_cast<long>(nodes_.size());
            lattice_.push_back({i, 0});
            interior_.push_back(poly_.strictly_contains(q) ? 1 : 0);
            nodes_d_.push_back({to_double(q[0]), 0.0});
            nodes_.push_back(std::move(q));
        }
        // Composite Simpson needs an even interval count; fall back to the
        // trapezoid rule otherwise.
        const double h = to_double(step_[0]);
        weights_.assign(nodes_.size(), 0.0);
        if (m_ % 2 == 0) {
            for (int i = 0; i <= m_; ++i) {
                double c = (i == 0 || i == m_) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
                weights_[static_cast<std::size_t>(i)] = c * h / 3.0;
            }
        } else {
            for (int i = 0; i <= m_; ++i)
                weights_[static_cast<std::size_t>(i)] = (i == 0 || i == m_) ? h / 2.0 : h;
        }
        volume_ = poly_.volume();
        volume_d_ = to_double(volume_);
        return;
    }

    const std::size_t side = static_cast<std::size_t>(m_) + 1;
    index_.assign(side * side, -1);
    for (int i = 0; i <= m_; ++i) {
        Rational x = coord_exact(0, i);
        for (int j = 0; j <= m_; ++j) {
            RPoint q(x, coord_exact(1, j));
            if (!poly_.contains(q)) continue;
            index_[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)] =
                static_cast<long>(nodes_.size());
            lattice_.push_back({i, j});
            interior_.push_back(poly_.strictly_contains(q) ? 1 : 0);
            nodes_d_.push_back({to_double(q[0]), to_double(q[1])});
            nodes_.push_back(std::move(q));
        }
    }

    // Product trapezoid with exact boundary correction: each bounding-box
    // cell contributes its clipped area split equally among its corners that
    // are grid nodes.  Interior cells reproduce the plain product rule.
    std::vector<Rational> wq(nodes_.size(), Rational(0));
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            Rational area = poly_.clip_rectangle_area(coord_exact(0, i), coord_exact(0, i + 1),
                                                      coord_exact(1, j), coord_exact(1, j + 1));
            if (area == 0) continue;
            long corner[4] = {node_at(i, j), node_at(i + 1, j), node_at(i, j + 1), node_at(i + 1, j + 1)};
            int inside = 0;
            for (long c : corner)
                if (c >= 0) ++inside;
            if (inside == 0)
                throw std::invalid_argument(
                    "Grid: resolution too coarse — a boundary cell has positive area but no node corner");
            Rational share = area / inside;
            for (long c : corner)
                if (c >= 0) wq[static_cast<std::size_t>(c)] += share;
        }
    }
    volume_ = Rational(0);
    weights_.resize(nodes_.size());
    for (std::size_t t = 0; t < nodes_.size(); ++t) {
        volume_ += wq[t];
        weights_[t] = to_double(wq[t]);
    }
    volume_d_ = to_double(volume_);
}

}  // namespace oklab
