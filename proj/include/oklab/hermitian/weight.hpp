#pragma once
// Continuous weights on the polarization: torus-invariant weights wrapped
// from symbols, and general continuous weights on the line given by their
// bounded excess over the Fubini–Study reference.

#include "oklab/convex/symbol.hpp"
#include "oklab/okounkov/variety.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <string>

namespace oklab {

class WeightFunction {
  public:
    enum class Kind { Invariant, GeneralP1 };

    // phi(z) = psi(log|z1|[, log|z2|]) for a convex symbol psi with gradient
    // range inside the moment polytope.
    static WeightFunction invariant(const Variety& variety, SymbolFunction psi, std::string id);
    // The Fubini–Study reference weight of the ambient polarization.
    static WeightFunction fubini_study(const Variety& variety);
    // General continuous weight on the line, given by the bounded excess
    // f = phi - phi_FS evaluated at a chart point z; `bound` certifies
    // sup |f|.
    static WeightFunction general_p1(const Variety& variety,
                                     std::function<double(std::complex<double>)> excess,
                                     std::string id, double bound);

    // phi + c: shifts the weight by a constant.
    WeightFunction shifted(double c) const;

    Kind kind() const { return kind_; }
    bool invariant_kind() const { return kind_ == Kind::Invariant; }
    const std::string& id() const { return id_; }
    const Variety& variety() const { return variety_; }
    const SymbolFunction& symbol() const;

    // Invariant path: excess g(x) = psi(rho(x)) - psi_FS(rho(x)) at an
    // interior moment point x (the inverse moment map of the reference).
    double excess_moment(double x0, double x1 = 0.0) const;
    // General path: f(z) = phi(z) - phi_FS(z).
    double excess_chart(const std::complex<double>& z) const;

    // Boundedness certificate: estimate of sup |phi - phi_FS|.
    double bound() const { return bound_; }

  private:
    WeightFunction(Kind kind, Variety variety, std::string id);

    Kind kind_;
    Variety variety_;
    std::string id_;
    std::shared_ptr<const SymbolFunction> psi_;
    std::shared_ptr<const SymbolFunction> fs_;
    std::function<double(std::complex<double>)> excess_;
    double shift_ = 0.0;
    double bound_ = 0.0;
};

}  // namespace oklab
