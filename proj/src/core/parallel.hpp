#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "spectra/limits.hpp"

namespace spectra::detail {

/// Splits [0, n) into contiguous chunks, runs body(begin, end) per chunk and
/// sums the results. The total does not depend on the number of workers.
template <typename Body>
std::uint64_t parallel_sum(std::uint64_t n, std::uint64_t work_per_item, Body&& body) {
  unsigned workers = worker_count();
  if (n * work_per_item < (std::uint64_t{1} << 18) || workers <= 1 || n < 2) {
    return body(std::uint64_t{0}, n);
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const auto begin = n * w / workers;
    const auto end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] { partial[w] = body(begin, end); });
  }
  for (auto& t : threads) t.join();
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

}  // namespace spectra::detail
