/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/bench.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include "bucketed_topk/exact.hpp"
#include "bucketed_topk/simdata.hpp"

namespace bucketed_topk {
namespace {

TopKResult run_op(const BenchConfig& config, const ScoreMatrix& input) {
  const std::size_t k = config.shape.k;
  switch (config.op) {
    case SelectionOp::ExactOracle: return exact_topk_oracle(input, k, config.workers);
    case SelectionOp::PriorityQueue: return priority_queue_topk(input, k, config.workers);
    case SelectionOp::ApproxPerBucket:
      return approx_topk(input, k, config.scheme, ExecutionMode::per_bucket(), config.workers);
    case SelectionOp::ApproxChunked:
      return approx_topk(input, k, config.scheme,
                         ExecutionMode::chunked_merge(config.chunks_per_bucket), config.workers);
  }
  return {};
}

bool uses_scheme(SelectionOp op) noexcept {
  return op == SelectionOp::ApproxPerBucket || op == SelectionOp::ApproxChunked;
}

}  // namespace

std::string_view to_string(SelectionOp op) noexcept {
  switch (op) {
    case SelectionOp::ExactOracle: return "exact-oracle";
    case SelectionOp::PriorityQueue: return "priority-queue";
    case SelectionOp::ApproxPerBucket: return "approx-per-bucket";
    case SelectionOp::ApproxChunked: return "approx-chunked";
  }
  return "unknown";
}

std::optional<SelectionOp> parse_selection_op(std::string_view text) noexcept {
  for (const auto op : {SelectionOp::ExactOracle, SelectionOp::PriorityQueue,
                        SelectionOp::ApproxPerBucket, SelectionOp::ApproxChunked}) {
    if (text == to_string(op)) return op;
  }
  return std::nullopt;
}

void fill_bench_input(ScoreMatrix& input, std::uint64_t seed, std::size_t iteration,
                      std::size_t workers) {
  fill_iid_normal(input, seed, static_cast<std::uint64_t>(iteration) * input.rows(), workers);
}

TimingStats time_selection(const BenchConfig& config, const InputObserver& observe) {
  if (uses_scheme(config.op)) {
    require_valid(config.shape, config.scheme);
  } else {
    require_valid(config.shape);
  }
  if (config.iterations == 0) throw TopkError(ErrorCode::DomainError, "iterations must be >= 1");

  ScoreMatrix input(config.shape.m, config.shape.n);
  std::vector<double> samples;
  samples.reserve(config.iterations);
  std::size_t sink = 0;
  const std::size_t total = config.warmup + config.iterations;
  for (std::size_t t = 0; t < total; ++t) {
    fill_bench_input(input, config.seed, t, config.workers);
    if (observe) observe(t, input);
    const auto start = std::chrono::steady_clock::now();
    const TopKResult result = run_op(config, input);
    const auto stop = std::chrono::steady_clock::now();
    sink += result.row(0)[0].index;
    if (t >= config.warmup) {
      samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
    }
  }
  // Keeps the selection observable so it cannot be elided.
  static volatile std::size_t keep_alive;
  keep_alive = sink;

  TimingStats stats;
  stats.iterations = samples.size();
  stats.warmup = config.warmup;
  double sum = 0.0;
  for (const double s : samples) sum += s;
  stats.mean_ns = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double squares = 0.0;
    for (const double s : samples) squares += (s - stats.mean_ns) * (s - stats.mean_ns);
    const double variance = squares / static_cast<double>(samples.size() - 1);
    stats.stderr_ns = std::sqrt(variance / static_cast<double>(samples.size()));
  }
  return stats;
}

std::size_t min_bytes_moved(const ProblemShape& shape, std::size_t value_bytes,
                            std::size_t index_bytes) noexcept {
  return shape.m * shape.n * value_bytes + shape.m * shape.k * (value_bytes + index_bytes);
}

BandwidthReport bandwidth(const ProblemShape& shape, std::size_t value_bytes,
                          std::size_t index_bytes, const TimingStats& stats) {
  if (!(stats.mean_ns > 0.0)) {
    throw TopkError(ErrorCode::DomainError, "mean duration must be positive");
  }
  BandwidthReport report;
  report.bytes_moved = min_bytes_moved(shape, value_bytes, index_bytes);
  report.duration_ns = stats.mean_ns;
  // bytes per nanosecond == gigabytes per second
  report.gbytes_per_s = static_cast<double>(report.bytes_moved) / stats.mean_ns;
  return report;
}

}  // namespace bucketed_topk
