#include "oklab/okounkov/body.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oklab {

Polytope okounkov_body(const Variety& variety, const FlagSpec& flag, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    std::vector<RPoint> points;
    for (int k = 1; k <= k_max; ++k) {
        const Rational kk(k);
        for (const Exp2& a : enumerate_graded_points(variety, flag, k))
            points.push_back(RPoint{Rational(a[0]) / kk, Rational(a[1]) / kk});
    }
    if (variety.dim() == 1) {
        Rational lo = points.front()[0], hi = points.front()[0];
        for (const RPoint& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return Polytope::interval(lo, hi);
    }
    return Polytope::hull2d(std::move(points));
}

VolumeIdentity body_volume_check(const Variety& variety, const Polytope& body) {
    VolumeIdentity out;
    out.body_volume = body.volume();
    Rational expected(variety.intersection_number());
    for (int i = 2; i <= variety.dim(); ++i) expected /= i;
    out.expected = expected;
    out.holds = (out.body_volume == out.expected);
    return out;
}

std::string graded_points_to_csv(const std::vector<std::pair<int, std::vector<Exp2>>>& levels,
                                 int dim) {
    std::ostringstream os;
    os << (dim == 1 ? "k,a1\n" : "k,a1,a2\n");
    for (const auto& [k, pts] : levels)
        for (const Exp2& a : pts) {
            os << k << "," << a[0];
            if (dim == 2) os << "," << a[1];
            os << "\n";
        }
    return os.str();
}

}  // namespace oklab
