#pragma once
// Gauss–Legendre rules and the shipped quadrature resolutions for weighted
// L² norms of sections.

#include "oklab/okounkov/variety.hpp"

#include <string>
#include <utility>
#include <vector>

namespace oklab {

// Nodes and weights of the n-point Gauss–Legendre rule mapped to [0, 1];
// exact (to roundoff) for polynomials of degree <= 2n - 1.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// Resolution bundle for Gram assembly.  Radial nodes live on the moment
// interval in the substitution t = r^2/(1+r^2); the angular count applies to
// the general (non-invariant) path on the line only.
struct QuadratureRule {
    std::string id;
    int degree_cap = 0;  // largest section degree k*d the rule certifies
    int radial = 0;      // Gauss–Legendre nodes per moment axis
    int angular = 0;     // uniform angular nodes (general weights, n = 1)

    // Shipped defaults: radial = k*d + 24 per axis (k + 22 on the plane),
    // angular = 2*k*d + 8.
    static QuadratureRule shipped(const Variety& variety, int k);
    static QuadratureRule custom(int degree_cap, int radial, int angular);
};

}  // namespace oklab
