/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bucketed_topk {

/// Name of the environment variable overriding the default worker count.
inline constexpr const char* kWorkersEnvVar = "BUCKETED_TOPK_WORKERS";

/// Worker count from BUCKETED_TOPK_WORKERS, else hardware concurrency (at least 1).
[[nodiscard]] std::size_t default_workers() noexcept;

/// Resolves 0 to default_workers().
[[nodiscard]] inline std::size_t resolve_workers(std::size_t workers) noexcept {
  return workers == 0 ? default_workers() : workers;
}

/**
 * Runs body(begin, end) over disjoint contiguous blocks covering [0, count).
 * Every index is visited exactly once; callers write to per-index slots only,
 * so results do not depend on the number of workers.
 */
template <typename Body>
void parallel_for(std::size_t count, std::size_t workers, Body&& body) {
  workers = std::min(resolve_workers(workers), count);
  if (workers <= 1) {
    if (count > 0) body(std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    const std::size_t block = count / workers;
    const std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t end = begin + block + (w < extra ? 1 : 0);
      auto task = [&body, &errors, w, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };
      if (w + 1 == workers) {
        task();
      } else {
        threads.emplace_back(task);
      }
      begin = end;
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace bucketed_topk
