#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gfc {

// Splits [0,n) into at most `workers` contiguous chunks and runs
// fn(chunk_index, lo, hi) for each. Chunk boundaries depend only on n and the
// chunk count, so per-chunk results merged in chunk order are deterministic.
// With one chunk, fn runs on the calling thread.
inline void run_chunks(std::uint64_t n, unsigned workers,
                       const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (n == 0) return;
    std::uint64_t w = workers == 0 ? 1 : workers;
    if (w > n) w = n;
    if (w == 1) {
        fn(0, 0, n);
        return;
    }
    const std::uint64_t base = n / w, rem = n % w;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(w));
    std::uint64_t lo = 0;
    for (unsigned c = 0; c < w; ++c) {
        std::uint64_t hi = lo + base + (c < rem ? 1 : 0);
        threads.emplace_back([&, c, lo, hi] {
            try {
                fn(c, lo, hi);
            } catch (...) {
                errs[c] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : threads) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace gfc
