#pragma once
// Exact rational convex bodies in dimension <= 2: intervals and convex
// polygons with counterclockwise vertex lists.

#include "oklab/rational.hpp"

#include <vector>

namespace oklab {

// Closed halfplane a0*x + a1*y <= b with exact rational coefficients.
struct Halfplane {
    Rational a0, a1, b;
};

class Polytope {
  public:
    // 1-D body [lo, hi], lo < hi.
    static Polytope interval(const Rational& lo, const Rational& hi);

    // Convex hull of 2-D points; throws std::invalid_argument when the hull
    // is not full-dimensional (all points collinear).
    static Polytope hull2d(std::vector<RPoint> points);

    // Vertices already in convex position, counterclockwise (validated).
    static Polytope polygon(std::vector<RPoint> ccw_vertices);

    static Polytope unit_interval() { return interval(Rational(0), Rational(1)); }
    static Polytope box(const Rational& x1, const Rational& y1);  // [0,x1] x [0,y1]
    static Polytope simplex2(const Rational& d);                  // conv{0, d e1, d e2}

    int dim() const { return dim_; }
    const std::vector<RPoint>& vertices() const { return verts_; }
    const std::vector<Halfplane>& halfplanes() const { return planes_; }

    bool contains(const RPoint& p) const;
    bool strictly_contains(const RPoint& p) const;

    // Length in 1-D, area in 2-D (exact).
    Rational volume() const;

    Rational bbox_min(int axis) const { return bb_min_[static_cast<std::size_t>(axis)]; }
    Rational bbox_max(int axis) const { return bb_max_[static_cast<std::size_t>(axis)]; }

    // Area of the intersection with the axis-aligned rectangle
    // [lo0,hi0] x [lo1,hi1] (2-D only; exact Sutherland–Hodgman clipping).
    Rational clip_rectangle_area(const Rational& lo0, const Rational& hi0,
                                 const Rational& lo1, const Rational& hi1) const;

    // Support function h(rho) = max over vertices of <rho, v>, in doubles.
    double support(double r0, double r1) const;

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.dim_ == b.dim_ && a.verts_ == b.verts_;
    }

  private:
    Polytope() = default;
    void build_planes();

    int dim_ = 0;
    std::vector<RPoint> verts_;       // 1-D: {lo, hi}; 2-D: CCW polygon
    std::vector<Halfplane> planes_;   // 2-D only
    std::array<Rational, 2> bb_min_{Rational(0), Rational(0)};
    std::array<Rational, 2> bb_max_{Rational(0), Rational(0)};
};

}  // namespace oklab
