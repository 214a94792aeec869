#include "elastoscat/threads.hpp"

#include <atomic>

#include "elastoscat/core.hpp"

namespace elast {

namespace {
std::atomic<int> g_threads{
    static_cast<int>(std::max(1u, std::thread::hardware_concurrency()))};
}

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int n) {
    if (n < 1) throw invalid_input("thread count must be >= 1");
    g_threads.store(n, std::memory_order_relaxed);
}

}  // namespace elast
