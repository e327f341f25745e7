#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qspectra {

// Worker count for batch drivers: QSPECTRA_WORKERS when set, otherwise the
// hardware concurrency, never below 1.
inline int worker_count() {
    if (const char* env = std::getenv("QSPECTRA_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for every i in [0, count), split across workers in contiguous
// chunks. Callers keep determinism by writing results into slot i only, so
// the outcome is identical for any worker count.
template <typename F>
void parallel_for(std::size_t count, F&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

} // namespace qspectra
