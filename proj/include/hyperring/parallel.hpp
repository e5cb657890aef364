#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace hyperring {

/**
 * Lowest index i in [0,total) with fn(i) true, or total when none.
 * fn must be pure. With jobs > 1 the range is chunked; workers bail once a
 * lower violation is known, so the result is identical to the serial scan.
 */
template <typename Fn>
uint64_t parallel_min_index(uint64_t total, uint32_t jobs, Fn&& fn) {
    if (jobs <= 1 || total < 4096) {
        for (uint64_t i = 0; i < total; ++i)
            if (fn(i)) return i;
        return total;
    }
    std::atomic<uint64_t> best(total);
    const uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (uint32_t w = 0; w < jobs; ++w) {
        const uint64_t lo = uint64_t(w) * chunk;
        const uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi]() {
            for (uint64_t i = lo; i < hi; ++i) {
                if (best.load(std::memory_order_relaxed) <= lo) return;
                if (fn(i)) {
                    uint64_t cur = best.load(std::memory_order_relaxed);
                    while (i < cur &&
                           !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    return best.load();
}

/// Runs fn(i) for all i in [0,total) across jobs threads; order-independent fn.
template <typename Fn>
void parallel_for(uint64_t total, uint32_t jobs, Fn&& fn) {
    if (jobs <= 1 || total <= 1) {
        for (uint64_t i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<uint64_t> next(0);
    std::vector<std::thread> pool;
    uint32_t nt = uint32_t(std::min<uint64_t>(jobs, total));
    pool.reserve(nt);
    for (uint32_t w = 0; w < nt; ++w)
        pool.emplace_back([&]() {
            for (uint64_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace hyperring
