#pragma once

#include <cstddef>
#include <functional>

namespace pmvlab {

/// Worker count for exhaustive loops. PMVLAB_WORKERS overrides the hardware default.
std::size_t worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(chunk_index, begin, end) for each. Returns the number of chunks so
/// callers can merge per-chunk results in index order.
std::size_t parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace pmvlab
