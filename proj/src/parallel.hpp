#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace gcfg::detail {

/// Worker count: hardware concurrency capped by GCFG_THREADS (>= 1).
inline unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GCFG_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Lexicographically-first index in [0, n) where `fails` returns true, or
/// nullopt.  Chunks are merged by minimum so the result is independent of
/// the worker count.
inline std::optional<size_t> first_failure(size_t n, const std::function<bool(size_t)>& fails) {
    const size_t kSerialThreshold = 1 << 13;
    unsigned workers = thread_cap();
    if (n < kSerialThreshold || workers <= 1) {
        for (size_t i = 0; i < n; ++i)
            if (fails(i)) return i;
        return std::nullopt;
    }
    std::vector<size_t> local(workers, n);
    std::vector<std::thread> pool;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        pool.emplace_back([&, w, lo, hi] {
            for (size_t i = lo; i < hi; ++i)
                if (fails(i)) { local[w] = i; return; }
        });
    }
    for (auto& t : pool) t.join();
    size_t best = *std::min_element(local.begin(), local.end());
    if (best == n) return std::nullopt;
    return best;
}

} // namespace gcfg::detail
