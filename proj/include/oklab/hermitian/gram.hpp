#pragma once
// Gram matrices of valuation-ordered section bases under weighted L² inner
// products: exact factorial formulas for the Fubini–Study reference, and
// quadrature assembly for invariant and general weights.

#include "oklab/hermitian/quadrature.hpp"
#include "oklab/hermitian/weight.hpp"
#include "oklab/okounkov/valuation.hpp"

#include <complex>
#include <string>
#include <vector>

namespace oklab {

// Row-major Hermitian matrix, sized by the section count.
struct HermitianMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    const std::complex<double>& at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

// Weighted L² Gram data in the valuation order of the basis (decreasing lex).
// Diagonal systems store log ||s_alpha||^2 so that entries spanning hundreds
// of orders of magnitude keep full relative precision.
struct GramSystem {
    int k = 0;
    SectionBasis basis;
    bool diagonal = false;
    std::vector<double> log_diag;          // diagonal: log of each norm^2
    HermitianMatrix dense;                 // non-diagonal systems
    std::vector<Rational> exact;           // exact diagonal norms when available
    std::string weight_id, quadrature_id;
};

// Exact Fubini–Study Gram for O(1) on the line or the plane:
// ||z^j||^2 = j!(k-j)!/(k+1)!  and  ||z^a||^2 = 2 a1!a2!(k-|a|)!/(k+2)!.
GramSystem gram_exact_fs(int k, const Variety& variety);

// Quadrature Gram for the given basis and weight.  Supported paths:
//   - invariant weight + coordinate flag basis: diagonal, moment-coordinate
//     Gauss–Legendre (log-space assembly keeps relative precision as the
//     norms decay exponentially in k);
//   - general weight on the line + coordinate flag basis: dense Hermitian
//     assembly from a radial x angular rule, rows in valuation order.
// Other combinations raise UnsupportedCombinationError.
GramSystem gram_matrix(int k, const SectionBasis& basis, const WeightFunction& weight,
                       const QuadratureRule& rule);

// Largest relative deviation between two Gram systems over matching entries,
// scaled by the geometric mean of the diagonal (usable across storage kinds).
double gram_relative_error(const GramSystem& a, const GramSystem& b);

}  // namespace oklab
