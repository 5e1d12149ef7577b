#pragma once

/**
 * @file parallel.hpp
 * @brief Deterministic parallel sweep over independent law instances.
 *
 * Results are collected into a pre-sized vector indexed by task, so the
 * output is byte-identical for any thread count. VCWB_THREADS caps the
 * worker count (default: hardware concurrency, at most 8).
 */

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace vcwb {

inline unsigned max_threads() {
    if (const char* env = std::getenv("VCWB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return hw > 8 ? 8 : hw;
}

template <typename R, typename Fn>
std::vector<R> parallel_map(size_t n, Fn fn) {
    std::vector<R> out(n);
    unsigned workers = max_threads();
    if (workers <= 1 || n < 16) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) out[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

} // namespace vcwb
