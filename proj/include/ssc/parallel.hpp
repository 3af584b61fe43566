#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ssc {

/// Worker count: SSCODES_WORKERS env var, else hardware concurrency.
unsigned worker_count();

/// Split [0, total) into contiguous chunks, one per worker; fn(begin, end)
/// runs on each chunk. Results must be merged associatively by the caller.
inline void parallel_chunks(std::uint64_t total,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    unsigned w = worker_count();
    if (total < 4096 || w <= 1) {
        fn(0, 0, total);
        return;
    }
    if (w > total) w = static_cast<unsigned>(total);
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + w - 1) / w;
    for (unsigned i = 0; i < w; ++i) {
        std::uint64_t b = i * chunk;
        std::uint64_t e = std::min(total, b + chunk);
        if (b >= e) break;
        threads.emplace_back([&fn, i, b, e] { fn(i, b, e); });
    }
    for (auto& t : threads) t.join();
}

} // namespace ssc
