#include "oklab/hermitian/chebyshev.hpp"

#include "oklab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace oklab {

namespace {

// In-place lower-triangular Cholesky of a Hermitian matrix in its stored
// order; returns the diagonal pivots.  Single-threaded: the factorization is
// tiny next to Gram assembly and must not depend on the thread count.
std::vector<double> cholesky_pivots(HermitianMatrix g) {
    const int n = g.n;
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::complex<double> s = g.at(j, j);
        for (int m = 0; m < j; ++m) s -= g.at(j, m) * std::conj(g.at(j, m));
        const double pivot = s.real();
        if (!(pivot > 0.0) || !std::isfinite(pivot))
            throw NumericalBreakdownError(
                "Cholesky pivot " + std::to_string(pivot) + " at basis index " +
                    std::to_string(j) +
                    ": Gram matrix not numerically positive definite — increase the "
                    "quadrature resolution",
                j);
        const double ljj = std::sqrt(pivot);
        diag[static_cast<std::size_t>(j)] = ljj;
        for (int i = j + 1; i < n; ++i) {
            std::complex<double> t = g.at(i, j);
            for (int m = 0; m < j; ++m) t -= g.at(i, m) * std::conj(g.at(j, m));
            g.at(i, j) = t / ljj;
        }
    }
    return diag;
}

}  // namespace

ChebyshevLevel chebyshev_level(const GramSystem& g) {
    ChebyshevLevel level;
    level.k = g.k;
    level.alphas = g.basis.valuations;
    level.weight_id = g.weight_id;
    level.quadrature_id = g.quadrature_id;
    level.values.reserve(level.alphas.size());
    if (g.diagonal) {
        for (double lg : g.log_diag) level.values.push_back(lg / (2.0 * g.k));
    } else {
        if (g.dense.n != static_cast<int>(level.alphas.size()))
            throw std::invalid_argument("Gram matrix size differs from the basis");
        for (double ljj : cholesky_pivots(g.dense))
            level.values.push_back(std::log(ljj) / g.k);
    }
    for (double v : level.values)
        if (!std::isfinite(v)) throw NumericalBreakdownError("non-finite level value", 0);
    return level;
}

ConvexGridFunction chebyshev_transform(const std::vector<ChebyshevLevel>& levels,
                                       const Polytope& body, const GridPtr& target) {
    if (levels.empty()) throw std::invalid_argument("chebyshev_transform needs at least one level");
    std::vector<LiftedPoint> points;
    for (const ChebyshevLevel& level : levels) {
        if (level.k < 1) throw std::invalid_argument("level degree must be >= 1");
        if (level.alphas.size() != level.values.size())
            throw std::invalid_argument("level value count differs from its support");
        for (std::size_t i = 0; i < level.alphas.size(); ++i) {
            const BigInt kk(level.k);
            RPoint x{Rational(BigInt(level.alphas[i][0]), kk),
                     Rational(BigInt(level.alphas[i][1]), kk)};
            if (!body.contains(x))
                throw std::invalid_argument("normalized valuation alpha/k outside the body at k=" +
                                            std::to_string(level.k));
            points.push_back({x, level.values[i]});
        }
    }
    return ConvexGridFunction(lower_convex_hull(points, target));
}

ConvergenceProfile convergence_profile(const std::vector<ChebyshevLevel>& levels,
                                       const GridPtr& target, const GridFunction* reference) {
    if (target->dim() != 1)
        throw UnsupportedCombinationError("convergence profiles are computed on the line only");
    if (levels.size() < 3)
        throw std::invalid_argument("convergence profile needs a ladder of >= 3 levels");
    std::vector<const ChebyshevLevel*> ladder;
    for (const ChebyshevLevel& l : levels) ladder.push_back(&l);
    std::sort(ladder.begin(), ladder.end(),
              [](const ChebyshevLevel* a, const ChebyshevLevel* b) { return a->k < b->k; });
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i)
        if (ladder[i]->k >= ladder[i + 1]->k)
            throw std::invalid_argument("ladder degrees must be strictly increasing");
    for (std::size_t i = 1; i + 1 < ladder.size(); ++i) {
        const long long prev = ladder[i - 1]->k, mid = ladder[i]->k, next = ladder[i + 1]->k;
        if (mid * mid != prev * next)
            throw std::invalid_argument("ladder degrees must be geometrically spaced");
    }

    // Piecewise-linear interpolation of each level at the target nodes.
    const std::size_t nn = target->size();
    const std::size_t nl = ladder.size();
    std::vector<std::vector<double>> y(nl, std::vector<double>(nn));
    for (std::size_t l = 0; l < nl; ++l) {
        const ChebyshevLevel& level = *ladder[l];
        std::vector<double> xs(level.alphas.size()), vs(level.alphas.size());
        const std::size_t m = level.alphas.size();
        for (std::size_t i = 0; i < m; ++i) {
            // Stored descending; flip to ascending x.
            xs[m - 1 - i] = static_cast<double>(level.alphas[i][0]) / level.k;
            vs[m - 1 - i] = level.values[i];
        }
        for (std::size_t nidx = 0; nidx < nn; ++nidx) {
            const double x = target->nodes()[nidx][0];
            if (x < xs.front() - 1e-12 || x > xs.back() + 1e-12)
                throw std::invalid_argument("target node outside the level support");
            const auto it = std::upper_bound(xs.begin(), xs.end(), x);
            std::size_t hi = static_cast<std::size_t>(it - xs.begin());
            if (hi == 0) hi = 1;
            if (hi == m) hi = m - 1;
            const double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
            y[l][nidx] = (1.0 - t) * vs[hi - 1] + t * vs[hi];
        }
    }

    // Per-node least squares against the model a + b log k / k.
    std::vector<double> ts(nl);
    for (std::size_t l = 0; l < nl; ++l)
        ts[l] = std::log(static_cast<double>(ladder[l]->k)) / ladder[l]->k;
    double s11 = static_cast<double>(nl), s12 = 0.0, s22 = 0.0;
    for (double t : ts) {
        s12 += t;
        s22 += t * t;
    }
    const double det = s11 * s22 - s12 * s12;

    ConvergenceProfile profile;
    std::vector<double> av(nn), bv(nn), rv(nn);
    std::size_t non_monotone = 0;
    for (std::size_t nidx = 0; nidx < nn; ++nidx) {
        double b1 = 0.0, b2 = 0.0;
        for (std::size_t l = 0; l < nl; ++l) {
            b1 += y[l][nidx];
            b2 += ts[l] * y[l][nidx];
        }
        av[nidx] = (s22 * b1 - s12 * b2) / det;
        bv[nidx] = (s11 * b2 - s12 * b1) / det;
        double res = 0.0;
        for (std::size_t l = 0; l < nl; ++l)
            res = std::max(res, std::abs(y[l][nidx] - av[nidx] - bv[nidx] * ts[l]));
        rv[nidx] = res;
        bool incr = true, decr = true;
        for (std::size_t l = 1; l < nl; ++l) {
            incr = incr && y[l][nidx] >= y[l - 1][nidx];
            decr = decr && y[l][nidx] <= y[l - 1][nidx];
        }
        if (!incr && !decr) ++non_monotone;
    }
    profile.a = GridFunction(target, std::move(av));
    profile.b = GridFunction(target, std::move(bv));
    profile.fit_residual = GridFunction(target, std::move(rv));
    if (non_monotone > 0)
        profile.warnings.push_back(std::to_string(non_monotone) + " of " + std::to_string(nn) +
                                   " nodes have non-monotone level values across the ladder");
    if (reference != nullptr) {
        require_same_grid(profile.a, *reference, "convergence_profile reference");
        profile.has_reference = true;
        profile.sup_deviation = sup_abs_difference(profile.a, *reference);
    }
    return profile;
}

std::string chebyshev_level_csv(const ChebyshevLevel& level, int dim) {
    std::string out = dim == 1 ? "k,a1,value\n" : "k,a1,a2,value\n";
    char buf[64];
    for (std::size_t i = 0; i < level.alphas.size(); ++i) {
        out += std::to_string(level.k);
        out += ',';
        out += std::to_string(level.alphas[i][0]);
        if (dim == 2) {
            out += ',';
            out += std::to_string(level.alphas[i][1]);
        }
        std::snprintf(buf, sizeof buf, ",%.17g\n", level.values[i]);
        out += buf;
    }
    return out;
}

}  // namespace oklab
