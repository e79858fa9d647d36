#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "count.hpp"

namespace mbfcount {

/// Progress sink: receives a task label and a completed fraction in [0, 1].
using ProgressFn = std::function<void(std::string_view label, double fraction)>;

/// Execution settings shared by the counting loops.
struct Exec {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  ProgressFn progress;  // empty = silent
};

namespace detail {

inline constexpr std::size_t kBlock = std::size_t{1} << 12;
// Loops shorter than this never report progress.
inline constexpr std::size_t kProgressMinimum = std::size_t{1} << 20;

}  // namespace detail

/// Sums body(i) over i in [0, count). Blocks are handed out dynamically;
/// the result is exact, so it does not depend on the worker count.
template <typename Body>
Count parallel_sum(std::size_t count, const Exec& exec, std::string_view label, Body&& body) {
  const std::size_t blocks = (count + detail::kBlock - 1) / detail::kBlock;
  const unsigned workers = static_cast<unsigned>(std::clamp<std::size_t>(exec.threads, 1, std::max<std::size_t>(blocks, 1)));
  const bool report = exec.progress && count >= detail::kProgressMinimum;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> finished{0};
  std::mutex report_mutex;
  int last_percent = -1;
  std::vector<Count> partial(workers, 0);

  auto run = [&](unsigned w) {
    Count local = 0;
    for (;;) {
      const std::size_t blk = next.fetch_add(1, std::memory_order_relaxed);
      if (blk >= blocks) break;
      const std::size_t lo = blk * detail::kBlock;
      const std::size_t hi = std::min(count, lo + detail::kBlock);
      for (std::size_t i = lo; i < hi; ++i) local += static_cast<Count>(body(i));
      const std::size_t done = finished.fetch_add(1, std::memory_order_relaxed) + 1;
      if (report) {
        const int percent = static_cast<int>(done * 100 / blocks);
        std::lock_guard lock(report_mutex);
        if (percent > last_percent) {
          last_percent = percent;
          exec.progress(label, static_cast<double>(done) / static_cast<double>(blocks));
        }
      }
    }
    partial[w] = local;
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Count total = 0;
  for (Count p : partial) total = checked_add(total, p);
  return total;
}

/// Runs body(i) for every i in [0, count); body must only write disjoint state.
template <typename Body>
void parallel_for(std::size_t count, const Exec& exec, Body&& body) {
  const std::size_t blocks = (count + detail::kBlock - 1) / detail::kBlock;
  const unsigned workers = static_cast<unsigned>(std::clamp<std::size_t>(exec.threads, 1, std::max<std::size_t>(blocks, 1)));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t blk = next.fetch_add(1, std::memory_order_relaxed);
      if (blk >= blocks) break;
      const std::size_t hi = std::min(count, (blk + 1) * detail::kBlock);
      for (std::size_t i = blk * detail::kBlock; i < hi; ++i) body(i);
    }
  };
  if (workers == 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
}

}  // namespace mbfcount
