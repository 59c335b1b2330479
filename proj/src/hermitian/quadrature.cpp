#include "oklab/hermitian/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace oklab {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
    std::vector<double> nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n));
    // Roots of P_n on [-1, 1] by Newton iteration from the Chebyshev guess,
    // exploiting symmetry; then mapped to [0, 1].
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: p0 = 1, p1 = x.
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= n; ++m) {
                const double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                p0 = 1.0;
                p1 = x;
                for (int m = 2; m <= n; ++m) {
                    const double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        nodes[lo] = (1.0 - x) / 2.0;  // x descending in i -> nodes ascending
        nodes[hi] = (1.0 + x) / 2.0;
        weights[lo] = w / 2.0;
        weights[hi] = w / 2.0;
    }
    return {std::move(nodes), std::move(weights)};
}

QuadratureRule QuadratureRule::shipped(const Variety& variety, int k) {
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    QuadratureRule q;
    if (variety.dim() == 1) {
        const int cap = k * variety.degree();
        q.degree_cap = cap;
        q.radial = cap + 24;
        q.angular = 2 * cap + 8;
    } else if (variety.kind() == VarietyKind::ProjSpace) {
        q.degree_cap = k * variety.degree();
        q.radial = q.degree_cap + 22;
        q.angular = 0;
    } else {
        // Product of lines: per-axis degree is k * d_i; use the larger.
        const auto hi0 = static_cast<int>(variety.moment_polytope().bbox_max(0));
        const auto hi1 = static_cast<int>(variety.moment_polytope().bbox_max(1));
        q.degree_cap = k * std::max(hi0, hi1);
        q.radial = q.degree_cap + 24;
        q.angular = 0;
    }
    q.id = "gl:" + std::to_string(q.radial) +
           (q.angular ? "x" + std::to_string(q.angular) : std::string()) +
           ":cap" + std::to_string(q.degree_cap);
    return q;
}

QuadratureRule QuadratureRule::custom(int degree_cap, int radial, int angular) {
    if (degree_cap < 1 || radial < 1) throw std::invalid_argument("bad quadrature resolution");
    QuadratureRule q;
    q.degree_cap = degree_cap;
    q.radial = radial;
    q.angular = angular;
    q.id = "gl:" + std::to_string(radial) +
           (angular ? "x" + std::to_string(angular) : std::string()) + ":cap" +
           std::to_string(degree_cap);
    return q;
}

}  // namespace oklab
