#include "oklab/hermitian/weight.hpp"

#include "oklab/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace oklab {

namespace {

SymbolFunction reference_symbol(const Variety& v) {
    if (v.dim() == 1) return fs_symbol_p1(v.degree());
    if (v.kind() == VarietyKind::ProjSpace) return fs_symbol_p2(v.degree());
    const Polytope& m = v.moment_polytope();
    if (m.vertices().size() == 4 && m == Polytope::box(m.bbox_max(0), m.bbox_max(1)))
        return fs_symbol_p1xp1(static_cast<int>(m.bbox_max(0)), static_cast<int>(m.bbox_max(1)));
    throw UnsupportedCombinationError(
        "no product reference metric for this toric surface; weighted norms are "
        "supported on the line, the plane, and products of lines");
}

}  // namespace

WeightFunction::WeightFunction(Kind kind, Variety variety, std::string id)
    : kind_(kind), variety_(std::move(variety)), id_(std::move(id)) {}

WeightFunction WeightFunction::invariant(const Variety& variety, SymbolFunction psi,
                                         std::string id) {
    if (psi.dim() != variety.dim())
        throw std::invalid_argument("symbol dimension does not match the variety");
    WeightFunction w(Kind::Invariant, variety, std::move(id));
    w.psi_ = std::make_shared<SymbolFunction>(std::move(psi));
    w.fs_ = std::make_shared<SymbolFunction>(reference_symbol(variety));
    // Boundedness certificate: sample |psi - psi_FS| on a coarse rho grid.
    double bound = 0.0;
    const int probes = 41;
    for (int i = 0; i < probes; ++i) {
        const double r0 = -10.0 + 20.0 * i / (probes - 1);
        if (variety.dim() == 1) {
            bound = std::max(bound, std::abs((*w.psi_)(r0) - (*w.fs_)(r0)));
        } else {
            for (int j = 0; j < probes; ++j) {
                const double r1 = -10.0 + 20.0 * j / (probes - 1);
                bound = std::max(bound, std::abs((*w.psi_)(r0, r1) - (*w.fs_)(r0, r1)));
            }
        }
    }
    w.bound_ = bound;
    return w;
}

WeightFunction WeightFunction::fubini_study(const Variety& variety) {
    return invariant(variety, reference_symbol(variety), "fs");
}

WeightFunction WeightFunction::general_p1(const Variety& variety,
                                          std::function<double(std::complex<double>)> excess,
                                          std::string id, double bound) {
    if (variety.dim() != 1)
        throw UnsupportedCombinationError("general weights are supported on the line only");
    WeightFunction w(Kind::GeneralP1, variety, std::move(id));
    w.excess_ = std::move(excess);
    w.bound_ = bound;
    return w;
}

WeightFunction WeightFunction::shifted(double c) const {
    WeightFunction w = *this;
    w.shift_ += c;
    w.bound_ = bound_ + std::abs(w.shift_);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+g", w.shift_);
    w.id_ = id_ + buf;
    return w;
}

const SymbolFunction& WeightFunction::symbol() const {
    if (kind_ != Kind::Invariant) throw std::logic_error("general weights carry no symbol");
    return *psi_;
}

double WeightFunction::excess_moment(double x0, double x1) const {
    if (kind_ != Kind::Invariant) throw std::logic_error("moment excess needs an invariant weight");
    double r0 = 0.0, r1 = 0.0;
    if (variety_.dim() == 1) {
        const double tau = x0 / variety_.degree();
        r0 = 0.5 * std::log(tau / (1.0 - tau));
    } else if (variety_.kind() == VarietyKind::ProjSpace) {
        const double d = variety_.degree();
        const double rest = 1.0 - (x0 + x1) / d;
        r0 = 0.5 * std::log(x0 / d / rest);
        r1 = 0.5 * std::log(x1 / d / rest);
    } else {
        const double d0 = to_double(variety_.moment_polytope().bbox_max(0));
        const double d1 = to_double(variety_.moment_polytope().bbox_max(1));
        const double t0 = x0 / d0, t1 = x1 / d1;
        r0 = 0.5 * std::log(t0 / (1.0 - t0));
        r1 = 0.5 * std::log(t1 / (1.0 - t1));
    }
    return (*psi_)(r0, r1) - (*fs_)(r0, r1) + shift_;
}

double WeightFunction::excess_chart(const std::complex<double>& z) const {
    if (kind_ != Kind::GeneralP1) throw std::logic_error("chart excess needs a general weight");
    return excess_(z) + shift_;
}

}  // namespace oklab
