#include "oklab/mabuchi/model.hpp"

#include "oklab/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace oklab {

ModelSpace ModelSpace::make(const Polytope& body, int grid_resolution, double p) {
    if (p < 1.0) throw std::invalid_argument("model exponent p must be >= 1");
    GridPtr grid = Grid::make(body, grid_resolution);
    ModelSpace m{body, grid, p, grid->volume()};
    if (!(m.volume > 0.0)) throw std::invalid_argument("model body has zero volume");
    return m;
}

double model_distance(const GridFunction& u0, const GridFunction& u1, double p) {
    if (p < 1.0) throw std::invalid_argument("model exponent p must be >= 1");
    require_same_grid(u0, u1, "model_distance");
    const std::vector<double>& w = u0.grid->weights();
    std::vector<double> terms(u0.size());
    for (std::size_t i = 0; i < u0.size(); ++i)
        terms[i] = w[i] * power_p(u0[i] - u1[i], p);
    return std::pow(pairwise_sum(terms) / u0.grid->volume(), 1.0 / p);
}

double model_energy(const GridFunction& u) {
    const std::vector<double>& w = u.grid->weights();
    std::vector<double> terms(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) terms[i] = w[i] * u[i];
    return -pairwise_sum(terms) / u.grid->volume();
}

RooftopResult energy_and_rooftop(const GridFunction& u0, const GridFunction& u1) {
    require_same_grid(u0, u1, "energy_and_rooftop");
    RooftopResult r;
    r.e0 = model_energy(u0);
    r.e1 = model_energy(u1);
    r.e_rooftop = model_energy(pointwise_max(u0, u1));
    r.d1_energy = r.e0 + r.e1 - 2.0 * r.e_rooftop;
    return r;
}

}  // namespace oklab
