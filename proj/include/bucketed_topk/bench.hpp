/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file bench.hpp
 *  \brief Timing harness for the selection routines.
 *
 *  Protocol: `warmup` untimed iterations, then `iterations` timed ones. Every
 *  iteration first refills the m x n input with fresh N(0,1) values (outside
 *  the measured span) and then times one synchronous selection call with a
 *  monotonic clock.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "bucketed_topk/approx.hpp"
#include "bucketed_topk/core.hpp"

namespace bucketed_topk {

enum class SelectionOp { ExactOracle, PriorityQueue, ApproxPerBucket, ApproxChunked };

[[nodiscard]] std::string_view to_string(SelectionOp op) noexcept;
[[nodiscard]] std::optional<SelectionOp> parse_selection_op(std::string_view text) noexcept;

/// Runs with stderr/mean above this are flagged unstable.
inline constexpr double kMaxRelativeStderr = 0.05;

struct TimingStats {
  double mean_ns = 0.0;
  double stderr_ns = 0.0;
  std::size_t iterations = 0;
  std::size_t warmup = 0;

  [[nodiscard]] double relative_stderr() const noexcept {
    return mean_ns > 0.0 ? stderr_ns / mean_ns : 0.0;
  }
  /// Needs at least two timed iterations and stderr/mean <= 5%.
  [[nodiscard]] bool stable() const noexcept {
    return iterations >= 2 && mean_ns > 0.0 && relative_stderr() <= kMaxRelativeStderr;
  }
};

struct BandwidthReport {
  std::size_t bytes_moved = 0;
  double duration_ns = 0.0;
  double gbytes_per_s = 0.0;
};

struct BenchConfig {
  SelectionOp op = SelectionOp::PriorityQueue;
  ProblemShape shape;
  BucketScheme scheme;  // ignored by the exact ops
  std::size_t chunks_per_bucket = kDefaultChunksPerBucket;
  std::size_t warmup = 16;
  std::size_t iterations = 512;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
};

/// Observes each refilled input; `iteration` counts warmup iterations first.
using InputObserver = std::function<void(std::size_t iteration, const ScoreMatrix& input)>;

/// Iteration t draws its input from streams [t*m, (t+1)*m) of the seed.
void fill_bench_input(ScoreMatrix& input, std::uint64_t seed, std::size_t iteration,
                      std::size_t workers = 0);

/// Throws TopkError for invalid shapes/schemes or iterations == 0.
[[nodiscard]] TimingStats time_selection(const BenchConfig& config,
                                         const InputObserver& observe = {});

/// Minimum traffic: one read of the input, one write of k (value, index) pairs per row.
[[nodiscard]] std::size_t min_bytes_moved(const ProblemShape& shape, std::size_t value_bytes,
                                          std::size_t index_bytes) noexcept;

/// Throws TopkError(DomainError) when stats.mean_ns <= 0.
[[nodiscard]] BandwidthReport bandwidth(const ProblemShape& shape, std::size_t value_bytes,
                                        std::size_t index_bytes, const TimingStats& stats);

}  // namespace bucketed_topk
