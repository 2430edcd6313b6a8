#pragma once

#include "bqf/int128.hpp"

#include <thread>
#include <vector>

namespace bqf {

// Runs fn(chunk, begin, end) over [0, total) split into contiguous chunks,
// one per worker. Chunks are disjoint, so workers never share state; callers
// merge per-chunk results in chunk order, which keeps outputs independent of
// scheduling.
template <typename Fn>
void parallel_chunks(i64 total, int threads, Fn &&fn) {
  if (total <= 0) return;
  int n = threads < 1 ? 1 : threads;
  if (static_cast<i64>(n) > total) n = static_cast<int>(total);
  if (n == 1) {
    fn(0, static_cast<i64>(0), total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n);
  i64 base = total / n, rem = total % n;
  i64 begin = 0;
  for (int c = 0; c < n; ++c) {
    i64 len = base + (c < rem ? 1 : 0);
    i64 end = begin + len;
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    begin = end;
  }
  for (auto &t : pool) t.join();
}

} // namespace bqf
