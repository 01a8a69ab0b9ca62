#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace apntri {

// 0 means "pick a default": APNTRI_THREADS if set, hardware concurrency
// otherwise.
unsigned resolve_threads(unsigned requested);

// Splits [0, n) into fixed-size chunks and hands them to workers in
// dynamic order. fn(begin, end, chunk_index) returns false to cancel: the
// cancelling chunk index is tracked as a running minimum and chunks above
// it are skipped. Because the claim counter is monotone, every chunk below
// the lowest cancelling index still runs, which keeps "first hit in index
// order" well defined regardless of the schedule.
void scan_chunks(std::uint64_t n, std::uint64_t chunk_size, unsigned threads,
                 const std::function<bool(std::uint64_t, std::uint64_t, std::size_t)>& fn);

inline std::size_t chunk_count(std::uint64_t n, std::uint64_t chunk_size) {
    return static_cast<std::size_t>((n + chunk_size - 1) / chunk_size);
}

}  // namespace apntri
