#include "parallel.hpp"

#include <cstdlib>

namespace apntri {

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested > 256 ? 256 : requested;
    if (const char* env = std::getenv("APNTRI_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void scan_chunks(std::uint64_t n, std::uint64_t chunk_size, unsigned threads,
                 const std::function<bool(std::uint64_t, std::uint64_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t nchunks = chunk_count(n, chunk_size);
    threads = resolve_threads(threads);
    if (threads > nchunks) threads = static_cast<unsigned>(nchunks);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_after{nchunks};  // lowest cancelling chunk

    auto worker = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks || c > stop_after.load(std::memory_order_relaxed)) return;
            std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
            std::uint64_t end = begin + chunk_size;
            if (end > n) end = n;
            if (!fn(begin, end, c)) {
                std::size_t cur = stop_after.load(std::memory_order_relaxed);
                while (c < cur && !stop_after.compare_exchange_weak(cur, c)) {
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace apntri
