#pragma once
// Flag valuations of sections and exact enumeration of the graded point sets
// Δᵏ by Gaussian elimination over the rationals.

#include "oklab/okounkov/flag.hpp"
#include "oklab/okounkov/polynomial.hpp"
#include "oklab/okounkov/variety.hpp"

#include <vector>

namespace oklab {

// Valuation of a section given by its chart-0 polynomial expression in the
// affine coordinates z_i = Z_i/Z_0 (exponent slots 1..n; slot 0 unused).
// The polynomial is homogenized to its total degree, the flag's coordinate
// change is applied exactly, the result is dehomogenized in the flag's marked
// chart, and the lexicographically smallest exponent of the support is
// returned (first local coordinate weighted first).  Zero input throws
// std::domain_error.
Exp2 lex_valuation(const RatPoly& chart_poly, const FlagSpec& flag);

// Same, for a homogeneous input polynomial in Z_0..Z_n.
Exp2 lex_valuation_hom(const RatPoly& hom_poly, const FlagSpec& flag);

// Valuation-adapted basis of H^0(X, kL): the reduced row echelon form of the
// transformed monomial basis, with columns in lexicographically ascending
// exponent order.  Pivot columns are the graded points Δᵏ; each row is the
// monic representative of its valuation class (leading coefficient one,
// support otherwise lex-greater).
struct SectionBasis {
    int k = 0;
    // Chart monomials spanning the degree-k sections, lex-ascending (columns).
    std::vector<Exp2> support;
    // Δᵏ in strictly decreasing lex order — the contract order downstream
    // norm computations rely on (highest valuation first).
    std::vector<Exp2> valuations;
    // reps[i][j] = coefficient of support[j] in the representative whose
    // valuation is valuations[i].
    std::vector<std::vector<Rational>> reps;
    // True when reps is a permuted identity (coordinate flags), so downstream
    // Gram matrices are diagonal in the monomial basis.
    bool diagonal = false;
};

SectionBasis section_basis(const Variety& variety, const FlagSpec& flag, int k);

// The graded point set Δᵏ, lex-ascending.
std::vector<Exp2> enumerate_graded_points(const Variety& variety, const FlagSpec& flag, int k);

}  // namespace oklab
