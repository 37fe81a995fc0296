#pragma once

#include <cstddef>
#include <functional>

namespace aplab {

// Worker cap from APLAB_THREADS (0 or unset = hardware concurrency).
std::size_t max_threads();

// Runs body(chunk_begin, chunk_end) over a fixed partition of [0, n).
// The partition depends only on n, never on the thread count, and chunk
// results must be merged by the caller in chunk order, so output is
// identical for any APLAB_THREADS setting.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t* n_chunks_out = nullptr);

std::size_t chunk_count(std::size_t n);

}  // namespace aplab
