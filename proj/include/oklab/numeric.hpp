#pragma once
// Deterministic numerical helpers: pairwise summation, logsumexp, and a
// fixed-partition parallel_for whose results do not depend on thread count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace oklab {

// Pairwise (cascade) summation: error O(log n) ulps and a fixed association
// order, so results are bit-identical across runs and thread counts.
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

// log(sum_i exp(a_i)) with the usual max shift; -inf entries are ignored.
inline double logsumexp(const std::vector<double>& a) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : a) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    std::vector<double> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::exp(a[i] - m);
    return m + std::log(pairwise_sum(e));
}

// |a|^p with fast paths for the small integer exponents the model uses.
inline double power_p(double a, double p) {
    a = std::abs(a);
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    if (p == 3.0) return a * a * a;
    return std::pow(a, p);
}

// Global worker count for parallel loops (set from the CLI --threads flag).
int parallel_threads() noexcept;
void set_parallel_threads(int n) noexcept;

// Runs fn(i) for i in [0, n). Work is split into fixed contiguous chunks that
// depend only on n (not on the thread count), so any per-index output written
// by fn is identical no matter how many workers execute the chunks.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = parallel_threads();
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::size_t chunk = (n + nw - 1) / nw;
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace oklab
