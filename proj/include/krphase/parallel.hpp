#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace krphase {

/// Worker-thread cap: KRPHASE_THREADS if set (>=1), hardware concurrency
/// otherwise.
inline unsigned max_threads() {
    if (const char* env = std::getenv("KRPHASE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Sum block_sum(b) over b in [0, num_blocks), accumulating the per-block
/// results in block order. Blocks are distributed over threads, but the
/// reduction order is fixed by the block partition, so the result is
/// bit-identical for every thread count.
inline double blocked_sum(long num_blocks, const std::function<double(long)>& block_sum) {
    const unsigned threads =
        std::min<unsigned>(max_threads(), static_cast<unsigned>(std::max<long>(num_blocks, 1)));
    std::vector<double> partial(static_cast<size_t>(num_blocks), 0.0);
    if (threads <= 1) {
        for (long b = 0; b < num_blocks; ++b) partial[static_cast<size_t>(b)] = block_sum(b);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (long b = next.fetch_add(1); b < num_blocks; b = next.fetch_add(1))
                    partial[static_cast<size_t>(b)] = block_sum(b);
            });
        }
        for (auto& th : pool) th.join();
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

} // namespace krphase
