#include "oklab/hermitian/gram.hpp"

#include "oklab/errors.hpp"
#include "oklab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace oklab {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Diagonal norms ||z^alpha||^2 of the lattice monomials (lex-ascending order)
// for an invariant weight, assembled in log space.
std::vector<double> invariant_log_norms(const Variety& variety, int k,
                                        const std::vector<Exp2>& lattice,
                                        const WeightFunction& weight,
                                        const QuadratureRule& rule) {
    const auto [nodes, weights] = gauss_legendre(rule.radial);
    const std::size_t nq = nodes.size();

    if (variety.dim() == 1) {
        const int bigk = k * variety.degree();
        const double d = variety.degree();
        std::vector<double> lt(nq), lm(nq), base(nq);
        for (std::size_t i = 0; i < nq; ++i) {
            lt[i] = std::log(nodes[i]);
            lm[i] = std::log1p(-nodes[i]);
            base[i] = std::log(weights[i]) - 2.0 * k * weight.excess_moment(d * nodes[i]);
        }
        std::vector<double> out(lattice.size());
        std::vector<double> terms(nq);
        for (std::size_t e = 0; e < lattice.size(); ++e) {
            const int j = lattice[e][0];
            for (std::size_t i = 0; i < nq; ++i)
                terms[i] = j * lt[i] + (bigk - j) * lm[i] + base[i];
            out[e] = logsumexp(terms);
        }
        return out;
    }

    if (variety.kind() == VarietyKind::ProjSpace) {
        // Simplex in moment coordinates via the square substitution
        // t1 = x1(1-x2), t2 = x2 with Jacobian (1-x2); the Fubini–Study part
        // of the integrand becomes polynomial in (x1, x2).
        const int bigk = k * variety.degree();
        const double d = variety.degree();
        std::vector<double> l1(nq), m1(nq), l2(nq), m2(nq), lw(nq);
        for (std::size_t i = 0; i < nq; ++i) {
            l1[i] = std::log(nodes[i]);
            m1[i] = std::log1p(-nodes[i]);
            l2[i] = l1[i];
            m2[i] = m1[i];
            lw[i] = std::log(weights[i]);
        }
        std::vector<double> excess(nq * nq);
        parallel_for(nq, [&](std::size_t i) {
            for (std::size_t j = 0; j < nq; ++j) {
                const double t1 = nodes[i] * (1.0 - nodes[j]);
                const double t2 = nodes[j];
                excess[i * nq + j] = -2.0 * k * weight.excess_moment(d * t1, d * t2);
            }
        });
        std::vector<double> out(lattice.size());
        parallel_for(lattice.size(), [&](std::size_t e) {
            const int a1 = lattice[e][0], a2 = lattice[e][1];
            std::vector<double> row(nq), col(nq), terms(nq * nq);
            for (std::size_t i = 0; i < nq; ++i)
                row[i] = a1 * l1[i] + (bigk - a1 - a2) * m1[i] + lw[i];
            for (std::size_t j = 0; j < nq; ++j)
                col[j] = a2 * l2[j] + (bigk - a2 + 1) * m2[j] + lw[j];
            for (std::size_t i = 0; i < nq; ++i)
                for (std::size_t j = 0; j < nq; ++j)
                    terms[i * nq + j] = row[i] + col[j] + excess[i * nq + j];
            out[e] = std::log(2.0) + logsumexp(terms);
        });
        return out;
    }

    // Product of lines: tensor rule over the moment box.
    const double d1 = to_double(variety.moment_polytope().bbox_max(0));
    const double d2 = to_double(variety.moment_polytope().bbox_max(1));
    const int k1 = static_cast<int>(std::lround(k * d1));
    const int k2 = static_cast<int>(std::lround(k * d2));
    std::vector<double> lt(nq), lm(nq), lw(nq);
    for (std::size_t i = 0; i < nq; ++i) {
        lt[i] = std::log(nodes[i]);
        lm[i] = std::log1p(-nodes[i]);
        lw[i] = std::log(weights[i]);
    }
    std::vector<double> excess(nq * nq);
    parallel_for(nq, [&](std::size_t i) {
        for (std::size_t j = 0; j < nq; ++j)
            excess[i * nq + j] = -2.0 * k * weight.excess_moment(d1 * nodes[i], d2 * nodes[j]);
    });
    std::vector<double> out(lattice.size());
    parallel_for(lattice.size(), [&](std::size_t e) {
        const int a1 = lattice[e][0], a2 = lattice[e][1];
        std::vector<double> row(nq), col(nq), terms(nq * nq);
        for (std::size_t i = 0; i < nq; ++i) row[i] = a1 * lt[i] + (k1 - a1) * lm[i] + lw[i];
        for (std::size_t j = 0; j < nq; ++j) col[j] = a2 * lt[j] + (k2 - a2) * lm[j] + lw[j];
        for (std::size_t i = 0; i < nq; ++i)
            for (std::size_t j = 0; j < nq; ++j) terms[i * nq + j] = row[i] + col[j] + excess[i * nq + j];
        out[e] = logsumexp(terms);
    });
    return out;
}

// Dense Hermitian Gram of the chart monomial basis for a general weight on
// the line: radial Gauss–Legendre in t = r^2/(1+r^2) (split by parity of the
// monomial degree sum) and a uniform angular rule.
HermitianMatrix general_p1_monomial_gram(const Variety& variety, int k,
                                         const WeightFunction& weight,
                                         const QuadratureRule& rule) {
    const int bigk = k * variety.degree();
    if (rule.angular < 2 * bigk + 1)
        throw std::invalid_argument("angular resolution below the section bandwidth");
    const auto [tn, tw] = gauss_legendre(rule.radial);
    const std::size_t nr = tn.size();
    const std::size_t na = static_cast<std::size_t>(rule.angular);

    // Even-degree nodes: t on [0,1].  Odd-degree nodes: t = sin^2(xi).
    std::vector<double> xi(nr), xw(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        xi[i] = tn[i] * (M_PI / 2.0);
        xw[i] = tw[i] * (M_PI / 2.0);
    }
    std::vector<double> fe(na * nr), fo(na * nr);  // e^{-2k f} tables
    std::vector<double> ct(na), st(na);
    for (std::size_t l = 0; l < na; ++l) {
        const double th = 2.0 * M_PI * static_cast<double>(l) / static_cast<double>(na);
        ct[l] = std::cos(th);
        st[l] = std::sin(th);
    }
    parallel_for(na, [&](std::size_t l) {
        for (std::size_t i = 0; i < nr; ++i) {
            const double re = std::sqrt(tn[i] / (1.0 - tn[i]));
            fe[l * nr + i] =
                std::exp(-2.0 * k * weight.excess_chart({re * ct[l], re * st[l]}));
            const double s = std::sin(xi[i]);
            const double ro = s / std::max(std::cos(xi[i]), 1e-300);
            fo[l * nr + i] =
                std::exp(-2.0 * k * weight.excess_chart({ro * ct[l], ro * st[l]}));
        }
    });

    HermitianMatrix g;
    g.n = bigk + 1;
    g.a.assign(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n), {0.0, 0.0});
    const std::size_t pairs = static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n);
    parallel_for(pairs, [&](std::size_t idx) {
        const int a = static_cast<int>(idx) / g.n;
        const int b = static_cast<int>(idx) % g.n;
        if (b > a) return;  // fill lower triangle, mirror afterwards
        const int s = a + b;
        std::vector<double> re_terms(na * nr), im_terms(na * nr);
        for (std::size_t l = 0; l < na; ++l) {
            const double cd = std::cos((a - b) * 2.0 * M_PI * static_cast<double>(l) /
                                       static_cast<double>(na));
            const double sd = std::sin((a - b) * 2.0 * M_PI * static_cast<double>(l) /
                                       static_cast<double>(na));
            for (std::size_t i = 0; i < nr; ++i) {
                double radial;
                if (s % 2 == 0) {
                    radial = tw[i] * std::pow(tn[i], s / 2) *
                             std::pow(1.0 - tn[i], bigk - s / 2) * fe[l * nr + i];
                } else {
                    const double sn = std::sin(xi[i]), cs = std::cos(xi[i]);
                    radial = xw[i] * 2.0 * std::pow(sn, s + 1) * std::pow(cs, 2 * bigk - s + 1) *
                             fo[l * nr + i];
                }
                re_terms[l * nr + i] = radial * cd;
                im_terms[l * nr + i] = radial * sd;
            }
        }
        const double scale = 1.0 / static_cast<double>(na);
        g.at(a, b) = {pairwise_sum(re_terms) * scale, pairwise_sum(im_terms) * scale};
    });
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) g.at(a, b) = std::conj(g.at(b, a));
    return g;
}

}  // namespace

GramSystem gram_exact_fs(int k, const Variety& variety) {
    if (variety.kind() != VarietyKind::ProjSpace || variety.degree() != 1)
        throw UnsupportedCombinationError("exact factorial norms cover O(1) on the line and the plane");
    GramSystem sys;
    sys.k = k;
    sys.basis = section_basis(variety, FlagSpec::coordinate(variety.dim()), k);
    sys.diagonal = true;
    sys.weight_id = "fs";
    sys.quadrature_id = "exact-beta";
    const BigInt denom = variety.dim() == 1 ? factorial(k + 1) : factorial(k + 2);
    sys.exact.reserve(sys.basis.valuations.size());
    sys.log_diag.reserve(sys.basis.valuations.size());
    for (const Exp2& a : sys.basis.valuations) {
        BigInt num = factorial(a[0]) * factorial(a[1]) * factorial(k - a[0] - a[1]);
        if (variety.dim() == 2) num *= 2;
        sys.exact.emplace_back(num, denom);
        double lg = log_factorial(a[0]) + log_factorial(a[1]) + log_factorial(k - a[0] - a[1]) -
                    log_factorial(k + variety.dim());
        if (variety.dim() == 2) lg += std::log(2.0);
        sys.log_diag.push_back(lg);
    }
    return sys;
}

GramSystem gram_matrix(int k, const SectionBasis& basis, const WeightFunction& weight,
                       const QuadratureRule& rule) {
    const Variety& variety = weight.variety();
    if (k != basis.k) throw std::invalid_argument("degree does not match the section basis");
    int section_degree = 0;
    if (variety.kind() == VarietyKind::ProjSpace) {
        section_degree = k * variety.degree();
    } else {
        section_degree = static_cast<int>(
            std::lround(to_double(variety.moment_polytope().bbox_max(0)) * k));
        section_degree = std::max(
            section_degree,
            static_cast<int>(std::lround(to_double(variety.moment_polytope().bbox_max(1)) * k)));
    }
    if (rule.degree_cap < section_degree)
        throw std::invalid_argument("quadrature degree cap below the section degree");
    if (!basis.diagonal)
        throw UnsupportedCombinationError(
            "weighted norms are computed in the coordinate-flag monomial basis; "
            "non-coordinate flags feed the body computation only");

    GramSystem sys;
    sys.k = k;
    sys.basis = basis;
    sys.weight_id = weight.id();
    sys.quadrature_id = rule.id;

    if (weight.invariant_kind()) {
        const std::vector<Exp2> lattice = variety.lattice_points(k);
        const std::vector<double> log_norms =
            invariant_log_norms(variety, k, lattice, weight, rule);
        std::map<Exp2, std::size_t> column;
        for (std::size_t j = 0; j < lattice.size(); ++j) column.emplace(lattice[j], j);
        sys.diagonal = true;
        sys.log_diag.reserve(basis.valuations.size());
        for (const Exp2& a : basis.valuations) sys.log_diag.push_back(log_norms[column.at(a)]);
        return sys;
    }

    // General weight on the line: dense Hermitian matrix, rows in the
    // valuation (descending exponent) order of the basis.
    if (variety.dim() != 1)
        throw UnsupportedCombinationError("general weights are supported on the line only");
    const HermitianMatrix mono = general_p1_monomial_gram(variety, k, weight, rule);
    sys.diagonal = false;
    sys.dense.n = mono.n;
    sys.dense.a.assign(mono.a.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < basis.valuations.size(); ++i)
        for (std::size_t j = 0; j < basis.valuations.size(); ++j)
            sys.dense.at(static_cast<int>(i), static_cast<int>(j)) =
                mono.at(basis.valuations[i][0], basis.valuations[j][0]);
    return sys;
}

double gram_relative_error(const GramSystem& a, const GramSystem& b) {
    const std::size_t n = a.basis.valuations.size();
    if (n != b.basis.valuations.size() || a.basis.valuations != b.basis.valuations)
        throw std::invalid_argument("gram systems over different bases");
    auto diag_log = [](const GramSystem& s, std::size_t i) {
        return s.diagonal ? s.log_diag[i]
                          : std::log(s.dense.at(static_cast<int>(i), static_cast<int>(i)).real());
    };
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // Diagonal: compare in log space for full relative precision.
        worst = std::max(worst, std::abs(std::expm1(diag_log(a, i) - diag_log(b, i))));
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::complex<double> va =
                a.diagonal ? std::complex<double>{0.0, 0.0}
                           : a.dense.at(static_cast<int>(i), static_cast<int>(j));
            const std::complex<double> vb =
                b.diagonal ? std::complex<double>{0.0, 0.0}
                           : b.dense.at(static_cast<int>(i), static_cast<int>(j));
            const double scale = std::exp(0.5 * (diag_log(b, i) + diag_log(b, j)));
            worst = std::max(worst, std::abs(va - vb) / scale);
        }
    }
    return worst;
}

}  // namespace oklab
