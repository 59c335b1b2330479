#pragma once
// Polarized varieties supported by the lab: O(d) on projective space (n <= 2)
// and polarized
// smooth toric surfaces given by their moment lattice polytope.

#include "oklab/convex/polytope.hpp"
#include "oklab/okounkov/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oklab {

enum class VarietyKind { ProjSpace, ToricSurface };

class Variety {
  public:
    // O(d) on projective space of dimension n (1 or 2), d >= 1.
    static Variety proj_space(int n, int d);
    // O(d1, d2) on the product of two lines; moment polytope [0,d1] x [0,d2].
    static Variety p1xp1(int d1, int d2);
    // Hirzebruch surface F_r polarized with moment polytope
    // conv{(0,0), (a + r*b, 0), (a, b), (0, b)}, a, b >= 1, r >= 1.
    static Variety hirzebruch(int r, int a, int b);
    // Parses identifiers "p1:d", "p2:d", "p1xp1:d1,d2", "hirzebruch:r,a,b".
    static Variety parse(const std::string& id);

    VarietyKind kind() const { return kind_; }
    int dim() const { return dim_; }
    // Line-bundle degree d for projective space; 0 for toric surfaces.
    int degree() const { return degree_; }
    const Polytope& moment_polytope() const { return moment_; }
    const std::string& id() const { return id_; }

    // dim H^0(X, kL): binomial(k d + n, n) for projective space, the lattice
    // point count of k * moment polytope for toric surfaces.
    long long h0(int k) const;

    // Top self-intersection (L^n) = n! * vol(moment polytope), an integer.
    long long intersection_number() const;

    // Homogeneous monomial exponents of degree k*d spanning H^0(kL)
    // (projective space only), lexicographically ascending.
    std::vector<Exp3> monomials(int k) const;

    // Lattice points of k * moment polytope, lexicographically ascending.
    std::vector<Exp2> lattice_points(int k) const;

  private:
    Variety(VarietyKind kind, int dim, int degree, Polytope moment, std::string id);

    VarietyKind kind_;
    int dim_;
    int degree_;
    Polytope moment_;
    std::string id_;
};

}  // namespace oklab
