#ifndef ROOTCENSUS_PARALLEL_HPP
#define ROOTCENSUS_PARALLEL_HPP

#include <thread>
#include <vector>

#include "rootcensus/numeric.hpp"

namespace rootcensus {

// Splits the inclusive index range [lo, hi] into one contiguous chunk per
// worker, evaluates chunk(chunk_lo, chunk_hi) on each, and adds the partial
// results together in index order.  Chunk sizes depend only on (lo, hi,
// workers), and the merge order is fixed, so the total is identical for every
// worker count as long as the chunk function itself is a pure range sum.
template <typename T, typename ChunkFn>
T parallel_reduce(const Int& lo, const Int& hi, int workers, T init, ChunkFn chunk) {
  if (hi < lo) return init;
  if (workers < 1) workers = 1;
  Int n = hi - lo + 1;
  if (n < workers) workers = static_cast<int>(n.get_si());
  if (workers == 1) {
    T total = init;
    total += chunk(lo, hi);
    return total;
  }

  Int base = n / workers;
  Int extra = n % workers;  // the first `extra` chunks take one more index
  std::vector<T> parts(static_cast<size_t>(workers), init);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  Int start = lo;
  for (int i = 0; i < workers; i++) {
    Int len = base + (i < extra ? 1 : 0);
    Int a = start;
    Int b = start + len - 1;
    start = b + 1;
    pool.emplace_back([&parts, &chunk, i, a, b] { parts[static_cast<size_t>(i)] = chunk(a, b); });
  }
  for (auto& t : pool) t.join();

  T total = init;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace rootcensus

#endif
