#include "oklab/numeric.hpp"

#include <atomic>

namespace oklab {

namespace {
std::atomic<int> g_threads{1};
}

int parallel_threads() noexcept { return g_threads.load(std::memory_order_relaxed); }

void set_parallel_threads(int n) noexcept { g_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace oklab
