#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pendant_lab {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

// Splits [0, total) into contiguous shards, one per worker, and calls
// f(begin, end, shard). Shard boundaries depend only on `total` and the
// worker count; callers merge per-shard results in shard order.
template <typename F>
void parallel_shards(std::uint64_t total, int threads, F&& f) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1 || total < 2 * workers) {
    f(std::uint64_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back([&, begin, end, w] {
      try {
        f(begin, end, static_cast<int>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// out[i] = f(i) for i in [0, total), computed in parallel.
template <typename T, typename F>
std::vector<T> parallel_map(std::uint64_t total, int threads, F&& f) {
  std::vector<T> out(total);
  parallel_shards(total, threads, [&](std::uint64_t begin, std::uint64_t end, int) {
    for (std::uint64_t i = begin; i < end; ++i) out[i] = f(i);
  });
  return out;
}

}  // namespace pendant_lab
