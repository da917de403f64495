#pragma once

#include "squiral/geometry.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace squiral {

// Static chunking over [0, n); each worker writes disjoint output, so the
// result is identical for every thread count.
template <typename Fn>
void parallel_for(Int n, int threads, Fn&& body) {
    threads = std::max(1, std::min<int>(threads, 64));
    if (threads == 1 || n < 2048) {
        body(Int{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    Int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        Int lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace squiral
