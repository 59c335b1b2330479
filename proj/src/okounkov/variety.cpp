#include "oklab/okounkov/variety.hpp"

#include "oklab/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace oklab {

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::vector<int> parse_ints(const std::string& s, std::size_t expected) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("bad integer '" + part + "' in variety id");
        out.push_back(v);
    }
    if (out.size() != expected) throw std::invalid_argument("wrong parameter count in variety id");
    return out;
}

}  // namespace

Variety::Variety(VarietyKind kind, int dim, int degree, Polytope moment, std::string id)
    : kind_(kind), dim_(dim), degree_(degree), moment_(std::move(moment)), id_(std::move(id)) {
    for (const RPoint& v : moment_.vertices())
        for (const Rational& c : v.x)
            if (boost::multiprecision::denominator(c) != 1)
                throw std::invalid_argument("moment polytope must have integral vertices");
}

Variety Variety::proj_space(int n, int d) {
    if (n < 1 || n > 2) throw std::invalid_argument("projective dimension must be 1 or 2");
    if (d < 1) throw std::invalid_argument("polarization degree must be >= 1");
    Polytope moment = n == 1 ? Polytope::interval(0, d) : Polytope::simplex2(d);
    std::string id = (n == 1 ? "p1:" : "p2:") + std::to_string(d);
    return Variety(VarietyKind::ProjSpace, n, d, std::move(moment), std::move(id));
}

Variety Variety::p1xp1(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("polarization degrees must be >= 1");
    std::string id = "p1xp1:" + std::to_string(d1) + "," + std::to_string(d2);
    return Variety(VarietyKind::ToricSurface, 2, 0, Polytope::box(d1, d2), std::move(id));
}

Variety Variety::hirzebruch(int r, int a, int b) {
    if (r < 1 || a < 1 || b < 1) throw std::invalid_argument("hirzebruch parameters must be >= 1");
    std::vector<RPoint> verts{
        RPoint{Rational(0), Rational(0)},
        RPoint{Rational(a + static_cast<long long>(r) * b), Rational(0)},
        RPoint{Rational(a), Rational(b)},
        RPoint{Rational(0), Rational(b)},
    };
    std::string id = "hirzebruch:" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(b);
    return Variety(VarietyKind::ToricSurface, 2, 0, Polytope::polygon(std::move(verts)), std::move(id));
}

Variety Variety::parse(const std::string& id) {
    auto colon = id.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("variety id needs kind:params, got '" + id + "'");
    const std::string kind = id.substr(0, colon);
    const std::string params = id.substr(colon + 1);
    if (kind == "p1") return proj_space(1, parse_ints(params, 1)[0]);
    if (kind == "p2") return proj_space(2, parse_ints(params, 1)[0]);
    if (kind == "p1xp1") {
        auto v = parse_ints(params, 2);
        return p1xp1(v[0], v[1]);
    }
    if (kind == "hirzebruch") {
        auto v = parse_ints(params, 3);
        return hirzebruch(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("unknown variety kind '" + kind + "'");
}

long long Variety::h0(int k) const {
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    if (kind_ == VarietyKind::ProjSpace)
        return binomial(static_cast<long long>(k) * degree_ + dim_, dim_);
    return static_cast<long long>(lattice_points(k).size());
}

long long Variety::intersection_number() const {
    if (kind_ == VarietyKind::ProjSpace) {
        long long out = 1;
        for (int i = 0; i < dim_; ++i) out *= degree_;
        return out;
    }
    Rational v = moment_.volume() * 2;  // n! vol for n = 2
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("toric intersection number must be integral");
    return static_cast<long long>(boost::multiprecision::numerator(v));
}

std::vector<Exp3> Variety::monomials(int k) const {
    if (kind_ != VarietyKind::ProjSpace)
        throw UnsupportedCombinationError("homogeneous monomial bases exist for projective space only");
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    const int total = k * degree_;
    std::vector<Exp3> out;
    if (dim_ == 1) {
        for (int e0 = 0; e0 <= total; ++e0) out.push_back({e0, total - e0, 0});
    } else {
        for (int e0 = 0; e0 <= total; ++e0)
            for (int e1 = 0; e1 <= total - e0; ++e1) out.push_back({e0, e1, total - e0 - e1});
    }
    return out;
}

std::vector<Exp2> Variety::lattice_points(int k) const {
    if (k < 1) throw std::invalid_argument("degree k must be >= 1");
    const Rational kk(k);
    std::vector<Exp2> out;
    if (dim_ == 1) {
        const long long lo = static_cast<long long>(moment_.bbox_min(0) * k);
        const long long hi = static_cast<long long>(moment_.bbox_max(0) * k);
        for (long long a = lo; a <= hi; ++a)
            if (moment_.contains(RPoint{Rational(a) / kk, Rational(0)}))
                out.push_back({static_cast<int>(a), 0});
        return out;
    }
    const long long lo0 = static_cast<long long>(moment_.bbox_min(0) * k);
    const long long hi0 = static_cast<long long>(moment_.bbox_max(0) * k);
    const long long lo1 = static_cast<long long>(moment_.bbox_min(1) * k);
    const long long hi1 = static_cast<long long>(moment_.bbox_max(1) * k);
    for (long long a0 = lo0; a0 <= hi0; ++a0)
        for (long long a1 = lo1; a1 <= hi1; ++a1)
            if (moment_.contains(RPoint{Rational(a0) / kk, Rational(a1) / kk}))
                out.push_back({static_cast<int>(a0), static_cast<int>(a1)});
    return out;
}

}  // namespace oklab
