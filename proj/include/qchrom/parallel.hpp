#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qchrom {

// Thread cap for internally parallel loops. QCHROM_THREADS overrides the
// hardware default; results never depend on the schedule.
inline int thread_budget() {
    if (const char* env = std::getenv("QCHROM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 64L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 8u));
}

// Runs fn(chunk_index, begin, end) over a partition of [0, n) on up to
// thread_budget() threads. Chunk boundaries depend only on n and the budget,
// so per-chunk results merge deterministically.
template <typename Fn>
void for_each_chunk(long long n, int chunks, Fn&& fn) {
    if (n <= 0) return;
    chunks = static_cast<int>(std::min<long long>(chunks, n));
    if (chunks <= 1) {
        fn(0, 0LL, n);
        return;
    }
    const long long step = (n + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        const long long lo = c * step;
        const long long hi = std::min(n, lo + step);
        if (lo >= hi) break;
        pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace qchrom
