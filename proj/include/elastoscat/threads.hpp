// Deterministic fork-join helper. Workers own disjoint index ranges, so
// results do not depend on scheduling; any reduction is the caller's job and
// should merge in index order.
#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace elast {

int thread_count();
void set_thread_count(int n);  // n >= 1

template <class F>
void parallel_for(std::size_t n, F&& body) {
    const int tc = std::min<std::size_t>(thread_count(), n ? n : 1);
    if (tc <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(tc);
    const std::size_t chunk = (n + tc - 1) / tc;
    for (int t = 0; t < tc; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace elast
