#pragma once
// Exact rational scalar type and small helpers shared across the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oklab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Point with exact rational coordinates; dim 1 uses only x[0].
struct RPoint {
    std::array<Rational, 2> x{Rational(0), Rational(0)};

    RPoint() = default;
    explicit RPoint(Rational a) : x{std::move(a), Rational(0)} {}
    RPoint(Rational a, Rational b) : x{std::move(a), std::move(b)} {}

    Rational& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
    const Rational& operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

    friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x; }
    friend bool operator!=(const RPoint& a, const RPoint& b) { return a.x != b.x; }
};

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Every finite double is a dyadic rational; the conversion below is exact.
inline Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(v, &exp);  // v = m * 2^exp, |m| in [1/2, 1)
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

// Formats as "p" or "p/q" (lowest terms, q > 0) — the on-disk rational format.
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Parses "p" or "p/q" with optional sign; throws std::invalid_argument on junk.
inline Rational rational_from_string(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("rational_from_string: cannot parse '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw bad();
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw bad();
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(BigInt(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
    return Rational(BigInt(num), d);
}

}  // namespace oklab
