#include "oklab/okounkov/flag.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace oklab {

namespace {

FlagSpec::Matrix identity3() {
    FlagSpec::Matrix m{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

Rational det_block(const FlagSpec::Matrix& m, int n) {
    if (n == 1) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

FlagSpec::FlagSpec(int n, Matrix m, int chart) : n_(n), m_(std::move(m)), chart_(chart) {
    if (n_ < 1 || n_ > 2) throw std::invalid_argument("flag ambient dimension must be 1 or 2");
    if (chart_ < 0 || chart_ > n_) throw std::invalid_argument("marked chart index out of range");
    // Unused block of the 3x3 storage is forced to the identity pattern so
    // that substitution leaves absent variables alone.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i > static_cast<std::size_t>(n_) || j > static_cast<std::size_t>(n_)) m_[i][j] = (i == j) ? 1 : 0;
    if (det() == 0) throw std::invalid_argument("flag matrix must be invertible");
}

FlagSpec FlagSpec::coordinate(int n) { return FlagSpec(n, identity3(), 0); }

FlagSpec FlagSpec::random_linear(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 256; ++attempt) {
        Matrix m = identity3();
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<long long>(rng() % 7) - 3;
        if (det_block(m, n) != 0) return FlagSpec(n, std::move(m), 0);
    }
    throw std::runtime_error("failed to sample an invertible flag matrix");
}

FlagSpec FlagSpec::p1_point(const Rational& z0) {
    // Z0 = W0, Z1 = z0*W0 + W1, so Z1 - z0*Z0 = W1 and the local coordinate
    // in chart 0 is w = z - z0.
    Matrix m = identity3();
    m[1][0] = z0;
    return FlagSpec(1, std::move(m), 0);
}

FlagSpec FlagSpec::from_matrix(int n, Matrix m, int chart) { return FlagSpec(n, std::move(m), chart); }

bool FlagSpec::is_coordinate() const {
    if (chart_ != 0) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (m_[i][j] != ((i == j) ? 1 : 0)) return false;
    return true;
}

Rational FlagSpec::det() const { return det_block(m_, n_); }

FlagSpec::Matrix FlagSpec::inverse_matrix() const {
    Matrix inv = identity3();
    const Rational d = det();
    if (n_ == 1) {
        inv[0][0] = m_[1][1] / d;
        inv[0][1] = -m_[0][1] / d;
        inv[1][0] = -m_[1][0] / d;
        inv[1][1] = m_[0][0] / d;
        return inv;
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            // Cyclic cofactor form (signs absorbed by the index rotation).
            const std::size_t r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            const std::size_t c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            inv[j][i] = (m_[r0][c0] * m_[r1][c1] - m_[r0][c1] * m_[r1][c0]) / d;
        }
    return inv;
}

std::string FlagSpec::describe() const {
    std::ostringstream os;
    os << "flag(n=" << n_ << ", chart=" << chart_ << ", matrix=[";
    for (int i = 0; i <= n_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j <= n_; ++j) {
            if (j) os << ",";
            os << rational_to_string(m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    os << "])";
    return os.str();
}

}  // namespace oklab
