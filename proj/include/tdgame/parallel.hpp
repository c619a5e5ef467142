#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tdgame {

// Default worker count: TDGAME_JOBS if set, else hardware concurrency.
inline int default_jobs() {
  if (const char* env = std::getenv("TDGAME_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [begin, end) into contiguous per-thread chunks and runs
// fn(thread_index, lo, hi) on each. Callers keep determinism by collecting
// per-thread results and merging them in thread order. fn must not throw.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int jobs, Fn&& fn) {
  if (end <= begin) return;
  std::uint64_t total = end - begin;
  int threads = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), total));
  if (threads <= 1) {
    fn(0, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    std::uint64_t lo = begin + total * static_cast<std::uint64_t>(t) /
                                   static_cast<std::uint64_t>(threads);
    std::uint64_t hi = begin + total * static_cast<std::uint64_t>(t + 1) /
                                   static_cast<std::uint64_t>(threads);
    pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace tdgame
