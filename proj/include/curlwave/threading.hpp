// threading.hpp — a process-wide worker cap and a block-partitioned
// parallel loop. Loop bodies must write only to their own index's output
// slot and must not throw; per-index work is identical regardless of the
// worker count, so results are bit-deterministic.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace curlwave {

namespace detail {
inline std::atomic<int>& thread_limit() {
    static std::atomic<int> n{0};  // 0 = hardware default
    return n;
}
}  // namespace detail

inline void set_thread_count(int n) { detail::thread_limit().store(n > 0 ? n : 0); }

inline int thread_count() {
    const int n = detail::thread_limit().load();
    if (n > 0) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <typename F>
void parallel_for(std::size_t n, F&& f) {
    const auto workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t wk = 0; wk < workers; ++wk) {
        const std::size_t lo = wk * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace curlwave
