/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "bucketed_topk/cost.hpp"
#include "bucketed_topk/recall.hpp"

using namespace bucketed_topk;
using Catch::Matchers::WithinRel;

TEST_CASE("regression values", "[cost]") {
  CHECK_THAT(exact_cost(CostModelKind::Basic, 1024, 4, 2), WithinRel(6144.0, 1e-12));
  CHECK_THAT(exact_cost(CostModelKind::Serial, 1024, 64, 1), WithinRel(45056.0, 1e-12));
  CHECK_THAT(exact_cost(CostModelKind::Parallel, 1024, 4, 1), WithinRel(92.0, 1e-12));
  CHECK_THAT(approx_cost(CostModelKind::Serial, 1024, 256, 1, 256, 1), WithinRel(2048.0, 1e-12));
}

TEST_CASE("algorithm tables", "[cost]") {
  const auto serial = algorithm_costs(CostModelKind::Serial, 1024, 64, 1);
  REQUIRE(serial.size() == 2);
  CHECK(serial[0].cost == 1024.0 * 191.0);
  CHECK(serial[1].cost == 1024.0 * 44.0);
  const auto parallel = algorithm_costs(CostModelKind::Parallel, 1024, 4, 1);
  REQUIRE(parallel.size() == 2);
  CHECK(parallel[0].cost == 92.0);
  CHECK(parallel[1].cost == 360.0);
  // fractional n
  CHECK_THAT(model_cost(CostModelKind::Basic, 2.5, 2, 4), WithinRel(4 * 2.5 * 2.0, 1e-15));
}

TEST_CASE("stage-2 indicator", "[cost]") {
  CHECK_FALSE(stage2_required(1024, 256, 256, 1));
  CHECK(stage2_required(1024, 256, 512, 1));
  CHECK_FALSE(stage2_required(1024, 256, 128, 2));
  // ragged: n=11, b=3, k_b=4 -> a bucket of 3 is short even though b*k_b = 12 > k
  CHECK(stage2_required(11, 12, 3, 4));
  CHECK(stage2_required(11, 4, 3, 2));
}

TEST_CASE("approx cost composes the two stages", "[cost]") {
  for (const auto model : {CostModelKind::Basic, CostModelKind::Serial, CostModelKind::Parallel}) {
    const double stage1 = model_cost(model, 1024.0 / 128.0, 2, 128.0);
    CHECK_THAT(approx_cost(model, 1024, 256, 1, 128, 2), WithinRel(stage1, 1e-12));
    const double with2 = model_cost(model, 1024.0 / 256.0, 2, 256.0) + model_cost(model, 512, 256, 1);
    CHECK_THAT(approx_cost(model, 1024, 256, 1, 256, 2), WithinRel(with2, 1e-12));
  }
  CHECK_THROWS_AS(approx_cost(CostModelKind::Serial, 1024, 256, 1, 128, 1), TopkError);
  CHECK_THROWS_AS(exact_cost(CostModelKind::Serial, 8, 9, 1), TopkError);
}

TEST_CASE("stage-2 cost is zero exactly when b*k_b = k on even buckets", "[cost][property]") {
  for (std::size_t b = 1; b <= 20; ++b) {
    for (std::size_t k_b = 1; k_b <= 20; ++k_b) {
      const std::size_t n = 4000;
      if (k_b > n / b) continue;
      std::vector<std::size_t> ks = {b * k_b};
      if (b > 1) ks.push_back(b * k_b - 1);
      for (const std::size_t k : ks) {
        const double stage1 = model_cost(CostModelKind::Serial, static_cast<double>(n) / b,
                                         static_cast<double>(k_b), static_cast<double>(b));
        const double total = approx_cost(CostModelKind::Serial, n, k, 1, b, k_b);
        if (b * k_b == k) {
          REQUIRE(total == stage1);
        } else {
          REQUIRE(total > stage1);
        }
      }
    }
  }
}

TEST_CASE("tradeoff curve", "[cost]") {
  const std::vector<std::size_t> kbs = {1, 2, 4};
  const std::vector<double> ratios = {4, 1, 2, 2};
  const auto curve = tradeoff_curve(CostModelKind::Serial, 1 << 20, 256, kbs, ratios);
  REQUIRE(curve.points.size() == 9);
  CHECK(curve.skipped.empty());
  CHECK(curve.points[0].k_b == 1);
  CHECK(curve.points[0].ratio == 1.0);
  CHECK(curve.points[2].ratio == 4.0);
  CHECK(curve.points[4].b == 256);
  const double exact = exact_cost(CostModelKind::Serial, 1 << 20, 256, 1);
  for (const auto& p : curve.points) {
    CHECK(p.b * p.k_b == static_cast<std::size_t>(p.ratio * 256));
    CHECK_THAT(p.relative_cost, WithinRel(p.cost / exact, 1e-12));
    CHECK(p.expected_error == expected_recall_error(256, p.b, p.k_b).expected_error);
  }
  const auto best = cheapest_within_error(curve.points, 0.05);
  REQUIRE(best);
  CHECK(best->k_b > 1);
}

TEST_CASE("tradeoff skips non-integral and invalid points", "[cost]") {
  const std::vector<std::size_t> kbs = {3, 1};
  const std::vector<double> ratios = {1, 0.5};
  const auto curve = tradeoff_curve(CostModelKind::Basic, 64, 8, kbs, ratios);
  // k_b=3: b = 8/3 and 4/3 not integral; k_b=1, ratio=0.5: b*k_b < k
  REQUIRE(curve.points.size() == 1);
  CHECK(curve.points[0].b == 8);
  CHECK(curve.skipped.size() == 3);
  CHECK_FALSE(cheapest_within_error(curve.points, 1e-9));
}

TEST_CASE("cost model names", "[cost]") {
  CHECK(parse_cost_model("parallel") == CostModelKind::Parallel);
  CHECK(to_string(CostModelKind::Basic) == "basic");
  CHECK_FALSE(parse_cost_model("gpu"));
}
