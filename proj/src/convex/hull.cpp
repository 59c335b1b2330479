#include "oklab/convex/hull.hpp"

#include "oklab/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oklab {

namespace {

struct RLifted {
    RPoint x;
    Rational v;
};

// ---- 1-D: exact monotone chain on (x, v), then piecewise-linear eval ----

std::vector<RLifted> lower_chain_1d(std::vector<RLifted> pts) {
    std::sort(pts.begin(), pts.end(), [](const RLifted& a, const RLifted& b) {
        return a.x[0] != b.x[0] ? a.x[0] < b.x[0] : a.v < b.v;
    });
    // Equal abscissae: only the lowest value can support the hull.
    std::vector<RLifted> uniq;
    for (auto& p : pts)
        if (uniq.empty() || uniq.back().x[0] != p.x[0]) uniq.push_back(std::move(p));
    if (uniq.size() < 2)
        throw std::invalid_argument("lower_convex_hull: affine span deficient (dimension 0 of 1)");

    std::vector<RLifted> h;
    for (auto& p : uniq) {
        while (h.size() >= 2) {
            const RLifted& a = h[h.size() - 2];
            const RLifted& b = h.back();
            // Keep b only if it lies strictly below segment a->p.
            Rational cr = (b.x[0] - a.x[0]) * (p.v - a.v) - (b.v - a.v) * (p.x[0] - a.x[0]);
            if (cr > 0) break;
            h.pop_back();
        }
        h.push_back(std::move(p));
    }
    return h;
}

double eval_chain(const std::vector<RLifted>& h, const Rational& x) {
    if (x < h.front().x[0] || x > h.back().x[0])
        throw std::invalid_argument("lower_convex_hull: target node outside the hull of the input points");
    auto it = std::upper_bound(h.begin(), h.end(), x,
                               [](const Rational& q, const RLifted& p) { return q < p.x[0]; });
    if (it == h.begin()) return to_double(h.front().v);
    std::size_t j = static_cast<std::size_t>(it - h.begin());
    if (j == h.size()) return to_double(h.back().v);
    const RLifted& a = h[j - 1];
    const RLifted& b = h[j];
    Rational t = (x - a.x[0]) / (b.x[0] - a.x[0]);
    return to_double(a.v + t * (b.v - a.v));
}

// ---- 2-D: per-node exact simplex LP over the lifted sites ----
// minimize sum(c_i l_i) s.t. sum(l_i x_i) = x*, sum(l_i y_i) = y*,
// sum(l_i) = 1, l >= 0.  Bland's rule; exact rationals throughout.

constexpr int kRows = 3;

struct Tableau {
    std::size_t ncols;                        // real columns (sites)
    std::vector<std::vector<Rational>> t;     // kRows x (ncols + kRows + 1)
    std::array<std::size_t, kRows> basis{};   // column index basic in each row

    Rational& at(int r, std::size_t c) { return t[static_cast<std::size_t>(r)][c]; }

    void pivot(int pr, std::size_t pc) {
        auto& prow = t[static_cast<std::size_t>(pr)];
        Rational inv = prow[pc];
        for (auto& x : prow) x /= inv;
        for (int r = 0; r < kRows; ++r) {
            if (r == pr) continue;
            Rational f = at(r, pc);
            if (f == 0) continue;
            auto& row = t[static_cast<std::size_t>(r)];
            for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * prow[c];
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }

    // Minimizes cost(col) over columns < limit; returns optimum.
    Rational run(const std::function<Rational(std::size_t)>& cost, std::size_t limit) {
        const std::size_t rhs = ncols + kRows;
        for (;;) {
            // Reduced costs: r_j = c_j - sum_r c_basis[r] * T[r][j].
            std::array<Rational, kRows> cb;
            for (int r = 0; r < kRows; ++r) cb[static_cast<std::size_t>(r)] = cost(basis[static_cast<std::size_t>(r)]);
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                bool basic = false;
                for (int r = 0; r < kRows; ++r)
                    if (basis[static_cast<std::size_t>(r)] == j) basic = true;
                if (basic) continue;
                Rational rc = cost(j);
                for (int r = 0; r < kRows; ++r) rc -= cb[static_cast<std::size_t>(r)] * at(r, j);
                if (rc < 0) {
                    enter = j;  // Bland: first negative
                    break;
                }
            }
            if (enter == limit) {
                Rational z(0);
                for (int r = 0; r < kRows; ++r) z += cb[static_cast<std::size_t>(r)] * at(r, rhs);
                return z;
            }
            int leave = -1;
            Rational best;
            for (int r = 0; r < kRows; ++r) {
                if (at(r, enter) <= 0) continue;
                Rational ratio = at(r, rhs) / at(r, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[static_cast<std::size_t>(r)] <
                                          basis[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0)
                throw std::logic_error("lower_convex_hull: LP unbounded (cannot happen on a simplex)");
            pivot(leave, enter);
        }
    }
};

struct Lp2Result {
    bool feasible;
    Rational value;
};

Lp2Result hull_value_2d(const std::vector<RLifted>& sites, const RPoint& target) {
    const std::size_t n = sites.size();
    Tableau tb;
    tb.ncols = n;
    tb.t.assign(kRows, std::vector<Rational>(n + kRows + 1, Rational(0)));
    std::array<Rational, kRows> b = {target[0], target[1], Rational(1)};
    for (std::size_t j = 0; j < n; ++j) {
        tb.t[0][j] = sites[j].x[0];
        tb.t[1][j] = sites[j].x[1];
        tb.t[2][j] = Rational(1);
    }
    for (int r = 0; r < kRows; ++r) {
        auto ur = static_cast<std::size_t>(r);
        if (b[ur] < 0) {  // flip the row so the rhs is nonnegative
            for (std::size_t j = 0; j < n; ++j) tb.t[ur][j] = -tb.t[ur][j];
            b[ur] = -b[ur];
        }
        tb.t[ur][n + ur] = Rational(1);  // artificial
        tb.t[ur][n + kRows] = b[ur];
        tb.basis[ur] = n + ur;
    }

    // Phase 1: drive the artificials to zero (include them in the scan so
    // they can leave the basis).
    Rational phase1 = tb.run(
        [n](std::size_t j) { return j >= n ? Rational(1) : Rational(0); }, n + kRows);
    if (phase1 != 0) return {false, Rational(0)};

    // Pivot any artificial still basic (at zero) out of the basis.
    for (int r = 0; r < kRows; ++r) {
        if (tb.basis[static_cast<std::size_t>(r)] < n) continue;
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tb.at(r, j) != 0) {
                pc = j;
                break;
            }
        if (pc < n) tb.pivot(r, pc);
        // An all-zero row would mean rank-deficient constraints, which the
        // affine-span precheck excludes.
    }

    Rational opt = tb.run(
        [&](std::size_t j) { return j >= n ? Rational(0) : sites[j].v; }, n);
    return {true, opt};
}

void check_affine_span_2d(const std::vector<RLifted>& sites) {
    bool two_distinct = false;
    std::size_t i0 = 0, i1 = 0;
    for (std::size_t i = 1; i < sites.size(); ++i)
        if (sites[i].x != sites[i0].x) {
            two_distinct = true;
            i1 = i;
            break;
        }
    if (!two_distinct)
        throw std::invalid_argument("lower_convex_hull: affine span deficient (dimension 0 of 2)");
    for (const auto& s : sites) {
        Rational cr = (sites[i1].x[0] - sites[i0].x[0]) * (s.x[1] - sites[i0].x[1]) -
                      (sites[i1].x[1] - sites[i0].x[1]) * (s.x[0] - sites[i0].x[0]);
        if (cr != 0) return;
    }
    throw std::invalid_argument("lower_convex_hull: affine span deficient (dimension 1 of 2)");
}

std::vector<RLifted> to_rational(const std::vector<LiftedPoint>& points) {
    std::vector<RLifted> sites;
    sites.reserve(points.size());
    for (const auto& p : points) sites.push_back({p.x, rational_from_double(p.value)});
    return sites;
}

GridFunction hull_on_grid(const std::vector<RLifted>& sites, const GridPtr& target) {
    std::vector<double> out(target->size());
    if (target->dim() == 1) {
        auto chain = lower_chain_1d(sites);
        for (std::size_t i = 0; i < target->size(); ++i)
            out[i] = eval_chain(chain, target->nodes_exact()[i][0]);
        return GridFunction(target, std::move(out));
    }
    check_affine_span_2d(sites);
    std::vector<char> bad(target->size(), 0);
    parallel_for(target->size(), [&](std::size_t i) {
        auto r = hull_value_2d(sites, target->nodes_exact()[i]);
        if (!r.feasible) {
            bad[i] = 1;
            return;
        }
        out[i] = to_double(r.value);
    });
    for (std::size_t i = 0; i < target->size(); ++i)
        if (bad[i])
            throw std::invalid_argument(
                "lower_convex_hull: target node outside the hull of the input points");
    return GridFunction(target, std::move(out));
}

}  // namespace

GridFunction lower_convex_hull(const std::vector<LiftedPoint>& points, const GridPtr& target) {
    if (points.empty()) throw std::invalid_argument("lower_convex_hull: no input points");
    for (const auto& p : points)
        if (!std::isfinite(p.value)) throw std::invalid_argument("lower_convex_hull: non-finite value");
    return hull_on_grid(to_rational(points), target);
}

GridFunction lower_convex_hull(const GridFunction& f) {
    std::vector<RLifted> sites;
    sites.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        sites.push_back({f.grid->nodes_exact()[i], rational_from_double(f.values[i])});
    return hull_on_grid(sites, f.grid);
}

double convexity_residual(const GridFunction& f) {
    GridFunction h = lower_convex_hull(f);
    double r = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) r = std::max(r, f.values[i] - h.values[i]);
    return r;
}

}  // namespace oklab
