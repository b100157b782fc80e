/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "bucketed_topk/bench.hpp"
#include "bucketed_topk/simdata.hpp"

using namespace bucketed_topk;

TEST_CASE("op names round-trip", "[bench]") {
  for (const auto op : {SelectionOp::ExactOracle, SelectionOp::PriorityQueue,
                        SelectionOp::ApproxPerBucket, SelectionOp::ApproxChunked}) {
    CHECK(parse_selection_op(to_string(op)) == op);
  }
  CHECK(to_string(SelectionOp::ApproxPerBucket) == "approx-per-bucket");
  CHECK_FALSE(parse_selection_op("heap"));
}

TEST_CASE("bytes moved and bandwidth", "[bench]") {
  const ProblemShape shape{8, 1 << 20, 1 << 17};
  CHECK(min_bytes_moved(shape, 4, 4) == 8u * (1u << 20) * 4u + 8u * (1u << 17) * 8u);
  TimingStats stats;
  stats.mean_ns = 1e6;
  stats.iterations = 10;
  const auto bw = bandwidth(shape, 4, 4, stats);
  CHECK(bw.bytes_moved == min_bytes_moved(shape, 4, 4));
  CHECK(bw.gbytes_per_s == static_cast<double>(bw.bytes_moved) / 1e6);
  stats.mean_ns = 0.0;
  CHECK_THROWS_AS(bandwidth(shape, 4, 4, stats), TopkError);
}

TEST_CASE("stability flag", "[bench]") {
  TimingStats s;
  s.mean_ns = 100.0;
  s.stderr_ns = 5.0;
  s.iterations = 2;
  CHECK(s.relative_stderr() == 0.05);
  CHECK(s.stable());
  s.stderr_ns = 5.1;
  CHECK_FALSE(s.stable());
  s.stderr_ns = 0.0;
  s.iterations = 1;
  CHECK_FALSE(s.stable());
}

TEST_CASE("each iteration sees fresh, reproducible input", "[bench]") {
  BenchConfig config;
  config.op = SelectionOp::ApproxPerBucket;
  config.shape = {2, 256, 32};
  config.scheme = {16, 2, Assignment::Interleaved};
  config.warmup = 2;
  config.iterations = 3;
  config.seed = 4;
  std::vector<std::size_t> seen;
  std::vector<float> first_values;
  const auto stats = time_selection(config, [&](std::size_t it, const ScoreMatrix& input) {
    seen.push_back(it);
    first_values.push_back(input.row(1)[0]);
    ScoreMatrix expected(2, 256);
    fill_bench_input(expected, 4, it);
    CHECK(std::equal(input.data().begin(), input.data().end(), expected.data().begin()));
  });
  CHECK(seen == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(first_values[0] != first_values[1]);
  CHECK(stats.iterations == 3);
  CHECK(stats.warmup == 2);
  CHECK(stats.mean_ns > 0.0);
  CHECK(stats.stderr_ns >= 0.0);

  // iteration t uses streams t*m .. t*m + m - 1
  ScoreMatrix input(2, 256);
  fill_bench_input(input, 4, 3);
  const auto direct = iid_normal(2, 256, 4, 6);
  CHECK(std::equal(input.data().begin(), input.data().end(), direct.data().begin()));
}

TEST_CASE("every op runs and invalid configs throw", "[bench]") {
  BenchConfig config;
  config.shape = {1, 4096, 64};
  config.scheme = {32, 2, Assignment::Interleaved};
  config.chunks_per_bucket = 8;
  config.warmup = 0;
  config.iterations = 2;
  for (const auto op : {SelectionOp::ExactOracle, SelectionOp::PriorityQueue,
                        SelectionOp::ApproxPerBucket, SelectionOp::ApproxChunked}) {
    config.op = op;
    CHECK(time_selection(config).iterations == 2);
  }
  config.iterations = 0;
  CHECK_THROWS_AS(time_selection(config), TopkError);
  config.iterations = 1;
  config.op = SelectionOp::ApproxPerBucket;
  config.scheme = {16, 2, Assignment::Interleaved};
  CHECK_THROWS_AS(time_selection(config), TopkError);
}
