#pragma once

// Runs trials in fixed-size batches over a small thread pool. Batch i always
// sees substream i, and per-batch results are merged in index order, so the
// output depends only on (seed, trials, batch_size).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace hhht::detail {

template <class Result, class Fn>
std::vector<Result> run_batches(std::uint64_t trials, std::uint64_t batch_size, Fn fn) {
  if (batch_size == 0) batch_size = 1;
  const std::uint64_t batches = (trials + batch_size - 1) / batch_size;
  std::vector<Result> results(batches);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < batches; b = next++) {
      const std::uint64_t count = std::min(batch_size, trials - b * batch_size);
      results[b] = fn(b, count);
    }
  };
  const auto hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, batches));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace hhht::detail
