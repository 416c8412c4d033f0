#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace upbw {

// Worker-thread count: UPBW_THREADS env var if set (>=1), else hardware count.
inline unsigned thread_count() {
    if (const char* env = std::getenv("UPBW_THREADS")) {
        try {
            long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (...) {
            // fall through to default
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, n). Results must be written to index-addressed slots
// so that the outcome is independent of scheduling; reductions happen after the
// join, in index order.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([w, workers, n, &fn] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace upbw
