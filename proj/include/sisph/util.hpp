#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace sisph {

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined behavior of std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Chunked parallel loop over [0, n). Each index writes only its own outputs,
// so results do not depend on the thread count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body) {
    if (threads <= 1 || n < 2048) {
        body(0, n);
        return;
    }
    const std::size_t t = static_cast<std::size_t>(threads);
    const std::size_t chunk = (n + t - 1) / t;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t k = 0; k < t; ++k) {
        const std::size_t b = k * chunk;
        if (b >= n) break;
        const std::size_t e = std::min(n, b + chunk);
        pool.emplace_back([&body, b, e] { body(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace sisph
