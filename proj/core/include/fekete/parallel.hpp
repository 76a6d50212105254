#pragma once

#include <cstddef>
#include <functional>

namespace fekete {

// Worker count: FEKETE_THREADS if set (and >= 1), otherwise the hardware
// concurrency, overridable for the whole process with set_thread_limit()
// (0 restores the default).
std::size_t thread_count();
void set_thread_limit(std::size_t n);

// Runs body(i) for i in [0, n) on up to thread_count() workers. The body must
// only write to state indexed by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Splits [0, n) into a fixed number of contiguous blocks that depends only on
// n, never on the worker count, so block-wise reductions are reproducible.
struct BlockRange {
  std::size_t begin;
  std::size_t end;
};
std::size_t block_count(std::size_t n);
BlockRange block_range(std::size_t n, std::size_t block);

// Pairwise (tree) sum in a fixed order.
double pairwise_sum(const double* values, std::size_t n);

}  // namespace fekete
