#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace latspan {

/// Worker pool size used by chunked loops. Defaults to the hardware
/// concurrency; always >= 1.
int worker_threads();
void set_worker_threads(int n);

/// Splits [0, n) into n_chunks contiguous ranges and runs
/// fn(chunk_index, begin, end) for each. Chunk boundaries depend only on
/// (n, n_chunks), never on the thread count, so per-chunk results are
/// reproducible and can be combined in chunk order.
void for_chunks(std::size_t n, std::size_t n_chunks,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Fixed-shape pairwise summation; the reduction tree depends only on the
/// input length, so the result is bit-stable for a given input order.
double pairwise_sum(std::span<const double> xs);

}  // namespace latspan
