#pragma once

#include <cstdint>
#include <functional>

namespace chiro {

// Worker count: CHIRO_THREADS when set (clamped to [1, 256]), otherwise
// std::thread::hardware_concurrency(). Read on each call so tests can vary it.
int thread_budget();

// Number of contiguous chunks [0, total) is split into.
int plan_chunks(std::int64_t total);

// Runs work(begin, end, chunk_index) on each chunk, one thread per chunk.
// Callers that collect results do so per chunk and concatenate in chunk
// order, which keeps output independent of the thread count.
void run_chunks(std::int64_t total, int chunks,
                const std::function<void(std::int64_t, std::int64_t, int)>& work);

}  // namespace chiro
