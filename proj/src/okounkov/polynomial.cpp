#include "oklab/okounkov/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace oklab {

RatPoly RatPoly::constant(Rational c) {
    RatPoly p;
    p.add_term({0, 0, 0}, c);
    return p;
}

RatPoly RatPoly::variable(int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("variable index out of range");
    Exp3 e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e);
}

RatPoly RatPoly::monomial(Exp3 e, Rational c) {
    RatPoly p;
    p.add_term(e, c);
    return p;
}

int RatPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1] + e[2]);
    return deg;
}

void RatPoly::add_term(const Exp3& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    RatPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

RatPoly RatPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    RatPoly out = constant(1);
    RatPoly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

RatPoly RatPoly::substituted(const std::array<std::array<Rational, 3>, 3>& rows) const {
    std::array<RatPoly, 3> forms;
    for (std::size_t i = 0; i < 3; ++i) {
        RatPoly f;
        for (std::size_t j = 0; j < 3; ++j)
            if (rows[i][j] != 0) f.add_term({j == 0 ? 1 : 0, j == 1 ? 1 : 0, j == 2 ? 1 : 0}, rows[i][j]);
        forms[i] = f;
    }
    RatPoly out;
    for (const auto& [e, c] : terms_) {
        RatPoly term = constant(c);
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i] > 0) term = term * forms[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

std::string RatPoly::str(int nvars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rational_to_string(c) << ")";
        for (int i = 0; i < nvars; ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                os << "*Z" << i << "^" << e[static_cast<std::size_t>(i)];
    }
    return os.str();
}

}  // namespace oklab
