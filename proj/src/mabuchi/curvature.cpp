#include "oklab/mabuchi/curvature.hpp"

#include "oklab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oklab {

double finsler_length(const GeodesicPath& path, double p, int time_resolution, double fd_width,
                      std::vector<std::string>* warnings) {
    if (p < 1.0) throw std::invalid_argument("model exponent p must be >= 1");
    if (time_resolution < 1) throw std::invalid_argument("time resolution must be >= 1");
    if (!(fd_width > 0.0)) throw std::invalid_argument("difference width must be positive");
    const GridPtr& grid = path.grid();
    const std::vector<double>& w = grid->weights();
    const double volume = grid->volume();

    std::vector<double> speeds(static_cast<std::size_t>(time_resolution));
    for (int i = 0; i < time_resolution; ++i) {
        const double t = (i + 0.5) / time_resolution;
        const double lo = std::max(0.0, t - fd_width);
        const double hi = std::min(1.0, t + fd_width);
        const GridFunction up = path.values_at(hi);
        const GridFunction um = path.values_at(lo);
        std::vector<double> terms(up.size());
        for (std::size_t n = 0; n < up.size(); ++n)
            terms[n] = w[n] * power_p((up[n] - um[n]) / (hi - lo), p);
        speeds[static_cast<std::size_t>(i)] = std::pow(pairwise_sum(terms) / volume, 1.0 / p);
    }
    if (warnings != nullptr) {
        for (int i = 0; i + 1 < time_resolution; ++i) {
            const double a = speeds[static_cast<std::size_t>(i)];
            const double b = speeds[static_cast<std::size_t>(i) + 1];
            const double big = std::max(a, b), small = std::min(a, b);
            if (big > 1e-9 && (small <= 0.0 || big / std::max(small, 1e-300) > 100.0))
                warnings->push_back("speed jump between t=" + std::to_string((i + 0.5) / time_resolution) +
                                    " and t=" + std::to_string((i + 1.5) / time_resolution));
        }
    }
    std::vector<double> contrib(speeds);
    for (double& s : contrib) s /= time_resolution;
    return pairwise_sum(contrib);
}

double busemann_test(const GeodesicPath& a, const GeodesicPath& b, double p, int samples) {
    if (samples < 3) throw std::invalid_argument("busemann_test needs >= 3 samples");
    std::vector<double> d(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        d[static_cast<std::size_t>(i)] = model_distance(a.values_at(t), b.values_at(t), p);
    }
    double worst = 1e300;
    for (int i = 1; i + 1 < samples; ++i)
        worst = std::min(worst, d[static_cast<std::size_t>(i) - 1] -
                                    2.0 * d[static_cast<std::size_t>(i)] +
                                    d[static_cast<std::size_t>(i) + 1]);
    return worst;
}

double cat0_flatness_test(const ConvexGridFunction& a, const ConvexGridFunction& b,
                          const ConvexGridFunction& c, double p) {
    if (p != 2.0)
        throw std::invalid_argument("the comparison-triangle test is defined for p = 2");
    const double dab = model_distance(a.f(), b.f(), p);
    const double dac = model_distance(a.f(), c.f(), p);
    const double dbc = model_distance(b.f(), c.f(), p);
    const GridFunction mid = affine_combination(0.5, a.f(), 0.5, b.f());
    const double dmc = model_distance(mid, c.f(), p);
    // Euclidean median of the comparison triangle; also correct in the
    // degenerate (collinear or coincident) cases.
    const double comparison =
        std::sqrt(std::max(0.0, 0.5 * dac * dac + 0.5 * dbc * dbc - 0.25 * dab * dab));
    return dmc - comparison;
}

}  // namespace oklab
