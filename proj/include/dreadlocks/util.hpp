#pragma once

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace dreadlocks {

inline unsigned thread_budget() {
    if (const char* env = std::getenv("DREADLOCK_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 8u) : 1u;
}

// Index-parallel map with deterministic slot writes.
inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    const unsigned threads = std::min<size_t>(thread_budget(), n ? n : 1);
    if (threads <= 1 || n < 32) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += threads) body(i);
        });
    for (auto& th : pool) th.join();
}

// 12 significant digits, the fixed float rendering of all outputs.
inline std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace dreadlocks
