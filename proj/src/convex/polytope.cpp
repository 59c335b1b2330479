#include "oklab/convex/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace oklab {

namespace {

Rational cross(const RPoint& o, const RPoint& a, const RPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

Polytope Polytope::interval(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("Polytope::interval: requires lo < hi");
    Polytope p;
    p.dim_ = 1;
    p.verts_ = {RPoint(lo), RPoint(hi)};
    p.bb_min_ = {lo, Rational(0)};
    p.bb_max_ = {hi, Rational(0)};
    return p;
}

Polytope Polytope::hull2d(std::vector<RPoint> points) {
    std::sort(points.begin(), points.end(), [](const RPoint& a, const RPoint& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n < 3) throw std::invalid_argument("Polytope::hull2d: affine span deficient (dimension <= 1 of 2)");

    // Andrew monotone chain, exact orientation tests; collinear points dropped.
    std::vector<RPoint> h(2 * n);
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (m >= 2 && cross(h[m - 2], h[m - 1], points[i]) <= 0) --m;
        h[m++] = points[i];
    }
    for (std::size_t i = n - 1, lower = m + 1; i-- > 0;) {
        while (m >= lower && cross(h[m - 2], h[m - 1], points[i]) <= 0) --m;
        h[m++] = points[i];
    }
    h.resize(m - 1);
    if (h.size() < 3) throw std::invalid_argument("Polytope::hull2d: affine span deficient (dimension 1 of 2)");
    return polygon(std::move(h));
}

Polytope Polytope::polygon(std::vector<RPoint> v) {
    if (v.size() < 3) throw std::invalid_argument("Polytope::polygon: needs >= 3 vertices");
    for (std::size_t i = 0; i < v.size(); ++i) {
        const RPoint& a = v[i];
        const RPoint& b = v[(i + 1) % v.size()];
        const RPoint& c = v[(i + 2) % v.size()];
        if (cross(a, b, c) <= 0)
            throw std::invalid_argument("Polytope::polygon: vertices not strictly convex counterclockwise");
    }
    Polytope p;
    p.dim_ = 2;
    p.verts_ = std::move(v);
    p.bb_min_ = {p.verts_[0][0], p.verts_[0][1]};
    p.bb_max_ = p.bb_min_;
    for (const auto& q : p.verts_) {
        for (int ax = 0; ax < 2; ++ax) {
            auto i = static_cast<std::size_t>(ax);
            if (q[ax] < p.bb_min_[i]) p.bb_min_[i] = q[ax];
            if (q[ax] > p.bb_max_[i]) p.bb_max_[i] = q[ax];
        }
    }
    p.build_planes();
    return p;
}

Polytope Polytope::box(const Rational& x1, const Rational& y1) {
    return polygon({RPoint(Rational(0), Rational(0)), RPoint(x1, Rational(0)), RPoint(x1, y1),
                    RPoint(Rational(0), y1)});
}

Polytope Polytope::simplex2(const Rational& d) {
    return polygon({RPoint(Rational(0), Rational(0)), RPoint(d, Rational(0)), RPoint(Rational(0), d)});
}

void Polytope::build_planes() {
    planes_.clear();
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RPoint& a = verts_[i];
        const RPoint& b = verts_[(i + 1) % n];
        // Outward normal of a CCW edge a->b is (dy, -dx).
        Halfplane h;
        h.a0 = b[1] - a[1];
        h.a1 = a[0] - b[0];
        h.b = h.a0 * a[0] + h.a1 * a[1];
        planes_.push_back(std::move(h));
    }
}

bool Polytope::contains(const RPoint& p) const {
    if (dim_ == 1) return verts_[0][0] <= p[0] && p[0] <= verts_[1][0];
    for (const auto& h : planes_)
        if (h.a0 * p[0] + h.a1 * p[1] > h.b) return false;
    return true;
}

bool Polytope::strictly_contains(const RPoint& p) const {
    if (dim_ == 1) return verts_[0][0] < p[0] && p[0] < verts_[1][0];
    for (const auto& h : planes_)
        if (h.a0 * p[0] + h.a1 * p[1] >= h.b) return false;
    return true;
}

Rational Polytope::volume() const {
    if (dim_ == 1) return verts_[1][0] - verts_[0][0];
    Rational twice(0);
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RPoint& a = verts_[i];
        const RPoint& b = verts_[(i + 1) % n];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return twice / 2;
}

Rational Polytope::clip_rectangle_area(const Rational& lo0, const Rational& hi0,
                                       const Rational& lo1, const Rational& hi1) const {
    if (dim_ != 2) throw std::invalid_argument("clip_rectangle_area: 2-D polytopes only");
    std::vector<RPoint> poly = {RPoint(lo0, lo1), RPoint(hi0, lo1), RPoint(hi0, hi1), RPoint(lo0, hi1)};
    for (const auto& h : planes_) {
        std::vector<RPoint> out;
        const std::size_t n = poly.size();
        if (n == 0) break;
        for (std::size_t i = 0; i < n; ++i) {
            const RPoint& cur = poly[i];
            const RPoint& nxt = poly[(i + 1) % n];
            Rational fc = h.b - (h.a0 * cur[0] + h.a1 * cur[1]);  // >= 0 means inside
            Rational fn = h.b - (h.a0 * nxt[0] + h.a1 * nxt[1]);
            if (fc >= 0) out.push_back(cur);
            if ((fc > 0 && fn < 0) || (fc < 0 && fn > 0)) {
                Rational t = fc / (fc - fn);
                out.emplace_back(cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1]));
            }
        }
        poly = std::move(out);
    }
    if (poly.size() < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RPoint& a = poly[i];
        const RPoint& b = poly[(i + 1) % poly.size()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return twice / 2;
}

double Polytope::support(double r0, double r1) const {
    double best = -1e300;
    for (const auto& v : verts_) best = std::max(best, r0 * to_double(v[0]) + r1 * to_double(v[1]));
    return best;
}

}  // namespace oklab
