#include "oklab/convex/symbol.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace oklab {

namespace {

// log(1 + e^t) without overflow.
double softplus(double t) { return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

// log(1 + e^a + e^b) without overflow.
double softmax3(double a, double b) {
    double m = std::max({0.0, a, b});
    return m + std::log(std::exp(-m) + std::exp(a - m) + std::exp(b - m));
}

}  // namespace

SymbolFunction SymbolFunction::closed_form(std::string id, int dim,
                                           std::function<double(double, double)> eval) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("SymbolFunction: dim must be 1 or 2");
    SymbolFunction s;
    s.id_ = std::move(id);
    s.dim_ = dim;
    s.pl_ = false;
    s.eval_ = std::move(eval);
    return s;
}

SymbolFunction SymbolFunction::pl_conjugate(const ConvexGridFunction& u) {
    SymbolFunction s;
    s.id_ = "pl-conjugate";
    s.dim_ = u.grid()->dim();
    s.pl_ = true;
    // Capture the node coordinates and values by value; the evaluator is the
    // exact conjugate of the piecewise-linear interpolant (max over nodes).
    auto nodes = u.grid()->nodes();
    std::vector<double> vals = u.f().values;
    if (s.dim_ == 1) {
        s.eval_ = [nodes, vals](double r0, double) {
            double best = -1e300;
            for (std::size_t i = 0; i < vals.size(); ++i)
                best = std::max(best, r0 * nodes[i][0] - vals[i]);
            return best;
        };
    } else {
        s.eval_ = [nodes, vals](double r0, double r1) {
            double best = -1e300;
            for (std::size_t i = 0; i < vals.size(); ++i)
                best = std::max(best, r0 * nodes[i][0] + r1 * nodes[i][1] - vals[i]);
            return best;
        };
    }
    return s;
}

std::array<double, 2> SymbolFunction::growth_gap(const Polytope& body, double radius,
                                                 int directions) const {
    double lo = 1e300, hi = -1e300;
    if (dim_ == 1) {
        for (double r : {-radius, radius}) {
            double gap = (*this)(r) - body.support(r, 0.0);
            lo = std::min(lo, gap);
            hi = std::max(hi, gap);
        }
    } else {
        for (int i = 0; i < directions; ++i) {
            double th = 2.0 * M_PI * i / directions;
            double r0 = radius * std::cos(th), r1 = radius * std::sin(th);
            double gap = (*this)(r0, r1) - body.support(r0, r1);
            lo = std::min(lo, gap);
            hi = std::max(hi, gap);
        }
    }
    return {lo, hi};
}

SymbolFunction fs_symbol_p1(int d) {
    return SymbolFunction::closed_form("fs-p1:" + std::to_string(d), 1,
                                       [d](double r, double) { return 0.5 * d * softplus(2.0 * r); });
}

SymbolFunction fs_symbol_p2(int d) {
    return SymbolFunction::closed_form(
        "fs-p2:" + std::to_string(d), 2,
        [d](double r0, double r1) { return 0.5 * d * softmax3(2.0 * r0, 2.0 * r1); });
}

SymbolFunction fs_symbol_p1xp1(int d1, int d2) {
    return SymbolFunction::closed_form(
        "fs-p1xp1:" + std::to_string(d1) + "," + std::to_string(d2), 2,
        [d1, d2](double r0, double r1) {
            return 0.5 * d1 * softplus(2.0 * r0) + 0.5 * d2 * softplus(2.0 * r1);
        });
}

}  // namespace oklab
