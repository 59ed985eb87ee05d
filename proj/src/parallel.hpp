#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace pnsbounds::detail {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Run fn(chunk) for every chunk in [0, chunks). Chunks are handed out
/// through an atomic counter and each writes only its own output slot, so
/// results do not depend on scheduling. fn must not throw.
template <typename Fn>
void for_each_chunk(int chunks, int threads, Fn&& fn) {
    threads = std::min(resolve_threads(threads), chunks);
    if (threads <= 1) {
        for (int c = 0; c < chunks; ++c) fn(c);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) fn(c);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads) - 1);
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace pnsbounds::detail
