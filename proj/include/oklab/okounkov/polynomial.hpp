#pragma once
// Sparse polynomials with exact rational coefficients in up to three
// homogeneous variables Z0, Z1, Z2 (projective ambients of dimension <= 2).

#include "oklab/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace oklab {

using Exp3 = std::array<int, 3>;  // homogeneous exponents (unused entries 0)
using Exp2 = std::array<int, 2>;  // chart exponents / valuations

class RatPoly {
  public:
    RatPoly() = default;  // zero polynomial

    static RatPoly constant(Rational c);
    static RatPoly variable(int i);                   // Z_i
    static RatPoly monomial(Exp3 e, Rational c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp3, Rational>& terms() const { return terms_; }
    int total_degree() const;

    void add_term(const Exp3& e, const Rational& c);

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly pow(int e) const;

    // Substitutes Z_i := sum_j rows[i][j] * W_j and expands; the result is a
    // polynomial in W.
    RatPoly substituted(const std::array<std::array<Rational, 3>, 3>& rows) const;

    std::string str(int nvars = 3) const;  // diagnostic form

  private:
    std::map<Exp3, Rational> terms_;
};

}  // namespace oklab
