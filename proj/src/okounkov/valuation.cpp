#include "oklab/okounkov/valuation.hpp"

#include "oklab/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oklab {

namespace {

// Chart exponents of a polynomial in W after setting W_chart = 1; remaining
// variables keep ascending index order as local coordinates w1[, w2].
std::map<Exp2, Rational> dehomogenize(const RatPoly& q, int n, int chart) {
    std::map<Exp2, Rational> out;
    for (const auto& [e, c] : q.terms()) {
        Exp2 local{0, 0};
        int slot = 0;
        for (int i = 0; i <= n; ++i) {
            if (i == chart) continue;
            local[static_cast<std::size_t>(slot++)] = e[static_cast<std::size_t>(i)];
        }
        auto [it, fresh] = out.emplace(local, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

void require_homogeneous(const RatPoly& p, int n) {
    int deg = -1;
    for (const auto& [e, c] : p.terms()) {
        for (int i = n + 1; i < 3; ++i)
            if (e[static_cast<std::size_t>(i)] != 0)
                throw std::invalid_argument("polynomial uses variables beyond the ambient dimension");
        const int d = e[0] + e[1] + e[2];
        if (deg == -1) deg = d;
        else if (d != deg) throw std::invalid_argument("expected a homogeneous polynomial");
    }
}

RatPoly homogenize_chart(const RatPoly& p, int n) {
    const int deg = p.total_degree();
    RatPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] != 0) throw std::invalid_argument("chart polynomial must use slots 1..n only");
        if (n == 1 && e[2] != 0)
            throw std::invalid_argument("chart polynomial uses a second variable on a curve");
        Exp3 h = e;
        h[0] = deg - e[1] - e[2];
        out.add_term(h, c);
    }
    return out;
}

}  // namespace

Exp2 lex_valuation_hom(const RatPoly& hom_poly, const FlagSpec& flag) {
    if (hom_poly.is_zero()) throw std::domain_error("the zero section has no valuation");
    require_homogeneous(hom_poly, flag.dim());
    const RatPoly q = hom_poly.substituted(flag.matrix());
    const auto chart = dehomogenize(q, flag.dim(), flag.chart());
    if (chart.empty()) throw std::domain_error("section vanishes identically in the marked chart");
    return chart.begin()->first;  // std::map keyed by lex order; first key is the lex-min
}

Exp2 lex_valuation(const RatPoly& chart_poly, const FlagSpec& flag) {
    if (chart_poly.is_zero()) throw std::domain_error("the zero section has no valuation");
    return lex_valuation_hom(homogenize_chart(chart_poly, flag.dim()), flag);
}

namespace {

SectionBasis diagonal_basis(const Variety& variety, int k) {
    SectionBasis basis;
    basis.k = k;
    basis.support = variety.lattice_points(k);
    basis.valuations.assign(basis.support.rbegin(), basis.support.rend());
    const std::size_t n = basis.support.size();
    basis.reps.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) basis.reps[i][n - 1 - i] = 1;
    basis.diagonal = true;
    return basis;
}

SectionBasis eliminated_basis(const Variety& variety, const FlagSpec& flag, int k) {
    const std::vector<Exp3> rows_hom = variety.monomials(k);
    const std::vector<Exp2> support = variety.lattice_points(k);
    std::map<Exp2, std::size_t> column;
    for (std::size_t j = 0; j < support.size(); ++j) column.emplace(support[j], j);

    const std::size_t nrows = rows_hom.size();
    const std::size_t ncols = support.size();
    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols, Rational(0)));
    for (std::size_t r = 0; r < nrows; ++r) {
        const RatPoly q = RatPoly::monomial(rows_hom[r]).substituted(flag.matrix());
        for (const auto& [e, c] : dehomogenize(q, flag.dim(), flag.chart())) {
            auto it = column.find(e);
            if (it == column.end())
                throw std::logic_error("transformed section leaves the chart monomial span");
            m[r][it->second] = c;
        }
    }

    // Reduced row echelon form with the column sweep in lex-ascending order,
    // so each pivot column is the lex-min exponent of its row: the valuation.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t sel = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (m[r][col] != 0) { sel = r; break; }
        if (sel == nrows) continue;
        std::swap(m[rank], m[sel]);
        const Rational inv = Rational(1) / m[rank][col];
        for (std::size_t j = col; j < ncols; ++j) m[rank][j] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t j = col; j < ncols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank != nrows)
        throw LeafPropertyError("rank " + std::to_string(rank) + " < section count " +
                                std::to_string(nrows) + " at degree " + std::to_string(k) +
                                ": one-dimensional leaf property violated");

    SectionBasis basis;
    basis.k = k;
    basis.support = support;
    basis.valuations.reserve(nrows);
    basis.reps.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        const std::size_t row = nrows - 1 - i;  // highest valuation first
        basis.valuations.push_back(support[pivot_cols[row]]);
        basis.reps.push_back(std::move(m[row]));
    }
    basis.diagonal = false;
    return basis;
}

}  // namespace

SectionBasis section_basis(const Variety& variety, const FlagSpec& flag, int k) {
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    if (flag.dim() != variety.dim())
        throw std::invalid_argument("flag dimension does not match the variety");
    SectionBasis basis;
    if (flag.is_coordinate()) {
        basis = diagonal_basis(variety, k);
    } else if (variety.kind() == VarietyKind::ToricSurface) {
        throw UnsupportedCombinationError(
            "linear flag matrices act on projective-space homogeneous coordinates; "
            "toric surfaces support the torus-invariant coordinate flag only");
    } else {
        basis = eliminated_basis(variety, flag, k);
    }
    if (static_cast<long long>(basis.valuations.size()) != variety.h0(k))
        throw LeafPropertyError("graded point count differs from dim H^0 at degree " +
                                std::to_string(k));
    for (std::size_t i = 1; i < basis.valuations.size(); ++i)
        if (!(basis.valuations[i - 1] > basis.valuations[i]))
            throw std::logic_error("section basis order must be strictly decreasing in valuation");
    return basis;
}

std::vector<Exp2> enumerate_graded_points(const Variety& variety, const FlagSpec& flag, int k) {
    SectionBasis basis = section_basis(variety, flag, k);
    std::vector<Exp2> pts(basis.valuations.rbegin(), basis.valuations.rend());
    return pts;
}

}  // namespace oklab
