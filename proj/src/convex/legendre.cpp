#include "oklab/convex/legendre.hpp"

#include "oklab/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace oklab {

namespace {

std::string node_string(const Grid& g, std::size_t idx) {
    const auto& q = g.nodes()[idx];
    if (g.dim() == 1) return "x = " + std::to_string(q[0]);
    return "x = (" + std::to_string(q[0]) + ", " + std::to_string(q[1]) + ")";
}

void check_convex_sequence(const std::vector<double>& s, double scale, const char* axis) {
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        if (s[i - 1] - 2.0 * s[i] + s[i + 1] < -1e-9 * scale)
            throw NonConvexError(std::string("legendre_transform: symbol samples not convex along ") +
                                 axis);
}

ConvexGridFunction transform_1d(const SymbolFunction& psi, const GridPtr& target,
                                const LegendreParams& p) {
    const double h = p.spacing_1d;
    double R = p.radius0;
    std::size_t offending = target->size();
    for (int attempt = 0; attempt <= p.max_doublings; ++attempt, R *= 2.0) {
        const long N = std::lround(R / h);
        const std::size_t count = static_cast<std::size_t>(2 * N + 1);
        std::vector<double> s(count);
        double scale = 1.0;
        for (std::size_t i = 0; i < count; ++i) {
            s[i] = psi((static_cast<long>(i) - N) * h);
            scale = std::max(scale, std::abs(s[i]));
        }
        check_convex_sequence(s, scale, "rho");

        std::vector<double> out(target->size());
        bool expand = false;
        std::size_t j = 0;  // argmax index, nondecreasing in x
        for (std::size_t idx = 0; idx < target->size(); ++idx) {
            const double x = target->nodes()[idx][0];
            auto g = [&](std::size_t i) { return (static_cast<long>(i) - N) * h * x - s[i]; };
            while (j + 1 < count && g(j + 1) > g(j)) ++j;
            out[idx] = g(j);
            if ((j == 0 || j == count - 1) && target->is_interior(idx)) {
                expand = true;
                offending = idx;
                break;
            }
        }
        if (expand) continue;
        if (p.used_radius) *p.used_radius = R;
        return ConvexGridFunction(GridFunction(target, std::move(out)), p.tau_cvx);
    }
    throw GrowthViolationError("legendre_transform: sup diverges (argmax stuck at the rho boundary) at " +
                               node_string(*target, offending == target->size() ? 0 : offending) +
                               " after radius " + std::to_string(R / 2.0));
}

ConvexGridFunction transform_2d(const SymbolFunction& psi, const GridPtr& target,
                                const LegendreParams& p) {
    const double h = p.spacing_2d;
    const int m = target->resolution();
    double R = p.radius0;
    std::size_t offending = target->size();
    for (int attempt = 0; attempt <= p.max_doublings; ++attempt, R *= 2.0) {
        const long N = std::lround(R / h);
        const std::size_t count = static_cast<std::size_t>(2 * N + 1);
        auto rho = [&](std::size_t i) { return (static_cast<long>(i) - N) * h; };

        // Stage 1: per rho1 row, partial conjugate over rho2 at every lattice
        // x2 value.  phi(rho1, x2) = max_i (rho2_i x2 - psi(rho1, rho2_i)) is
        // concave in rho1, so stage 2 is again a monotone sweep.
        const std::size_t cols = static_cast<std::size_t>(m) + 1;
        std::vector<double> M1(count * cols), row(count), prev, prev2;
        std::vector<char> flag1(count * cols, 0);
        for (std::size_t r = 0; r < count; ++r) {
            double scale = 1.0;
            for (std::size_t i = 0; i < count; ++i) {
                row[i] = psi(rho(r), rho(i));
                scale = std::max(scale, std::abs(row[i]));
            }
            check_convex_sequence(row, scale, "rho2");
            if (r >= 2) {
                for (std::size_t i = 0; i < count; ++i)
                    if (prev2[i] - 2.0 * prev[i] + row[i] < -1e-9 * scale)
                        throw NonConvexError(
                            "legendre_transform: symbol samples not convex along rho1");
            }
            prev2 = std::move(prev);
            prev = row;

            std::size_t j = 0;
            for (int j2 = 0; j2 <= m; ++j2) {
                const double x2 = to_double(target->coord_exact(1, j2));
                auto g = [&](std::size_t i) { return rho(i) * x2 - row[i]; };
                while (j + 1 < count && g(j + 1) > g(j)) ++j;
                M1[r * cols + static_cast<std::size_t>(j2)] = g(j);
                if (j == 0 || j == count - 1) flag1[r * cols + static_cast<std::size_t>(j2)] = 1;
            }
        }

        // Stage 2: per lattice column, conjugate over rho1.
        std::vector<double> out(target->size());
        bool expand = false;
        for (int j2 = 0; j2 <= m && !expand; ++j2) {
            std::size_t r = 0;
            for (int i1 = 0; i1 <= m; ++i1) {
                long idx = target->node_at(i1, j2);
                if (idx < 0) continue;
                const double x1 = to_double(target->coord_exact(0, i1));
                auto g = [&](std::size_t rr) {
                    return rho(rr) * x1 + M1[rr * cols + static_cast<std::size_t>(j2)];
                };
                while (r + 1 < count && g(r + 1) > g(r)) ++r;
                out[static_cast<std::size_t>(idx)] = g(r);
                bool boundary = (r == 0 || r == count - 1) ||
                                flag1[r * cols + static_cast<std::size_t>(j2)] != 0;
                if (boundary && target->is_interior(static_cast<std::size_t>(idx))) {
                    expand = true;
                    offending = static_cast<std::size_t>(idx);
                    break;
                }
            }
        }
        if (expand) continue;
        if (p.used_radius) *p.used_radius = R;
        return ConvexGridFunction(GridFunction(target, std::move(out)), p.tau_cvx);
    }
    throw GrowthViolationError("legendre_transform: sup diverges (argmax stuck at the rho boundary) at " +
                               node_string(*target, offending == target->size() ? 0 : offending) +
                               " after radius " + std::to_string(R / 2.0));
}

}  // namespace

ConvexGridFunction legendre_transform(const SymbolFunction& psi, const GridPtr& target,
                                      const LegendreParams& params) {
    if (psi.dim() != target->dim())
        throw std::invalid_argument("legendre_transform: symbol/grid dimension mismatch");
    return target->dim() == 1 ? transform_1d(psi, target, params) : transform_2d(psi, target, params);
}

SymbolFunction legendre_back(const ConvexGridFunction& u) { return SymbolFunction::pl_conjugate(u); }

std::vector<double> tabulate(const SymbolFunction& psi,
                             const std::vector<std::array<double, 2>>& rho_points) {
    std::vector<double> out(rho_points.size());
    for (std::size_t i = 0; i < rho_points.size(); ++i) out[i] = psi(rho_points[i][0], rho_points[i][1]);
    return out;
}

}  // namespace oklab
