#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace matroid {

// Worker count used by the subset sweeps and candidate loops.  Results are
// merged deterministically, so the setting never changes any output.
inline int& jobs() {
  static int j = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return j;
}

inline void set_jobs(int j) { jobs() = j < 1 ? 1 : j; }

namespace detail {

// Run fn(begin, end) over a partition of [0, count) on the configured number
// of workers.  fn must be safe to call concurrently on disjoint ranges.
template <typename Fn>
void run_chunked(std::uint64_t count, Fn&& fn) {
  int workers = jobs();
  if (count == 0) return;
  if (workers <= 1 || count < 1024) {
    fn(static_cast<std::uint64_t>(0), count);
    return;
  }
  std::uint64_t w = static_cast<std::uint64_t>(workers);
  if (w > count) w = count;
  std::uint64_t chunk = (count + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(w));
  for (std::uint64_t t = 0; t < w; ++t) {
    std::uint64_t b = t * chunk;
    std::uint64_t e = std::min(count, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace detail

// Smallest index in [0, count) satisfying pred, scanned in parallel.  Workers
// skip work beyond the best index found so far; the minimum wins, so the
// result equals a plain ascending scan.
template <typename Pred>
std::optional<std::uint64_t> parallel_first_index(std::uint64_t count, Pred&& pred) {
  std::atomic<std::uint64_t> best{UINT64_MAX};
  detail::run_chunked(count, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (pred(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  });
  std::uint64_t b = best.load();
  if (b == UINT64_MAX) return std::nullopt;
  return b;
}

// True iff some index in [0, count) satisfies pred.
template <typename Pred>
bool parallel_any(std::uint64_t count, Pred&& pred) {
  std::atomic<bool> found{false};
  detail::run_chunked(count, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      if (found.load(std::memory_order_relaxed)) return;
      if (pred(i)) {
        found.store(true, std::memory_order_relaxed);
        return;
      }
    }
  });
  return found.load();
}

}  // namespace matroid
