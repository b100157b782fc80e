/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "bucketed_topk/exact.hpp"
#include "support/oracles.hpp"

using namespace bucketed_topk;

namespace {

std::vector<float> values_of(std::span<const ScoredIndex> row) {
  std::vector<float> out;
  for (const auto& e : row) out.push_back(e.value);
  return out;
}

std::vector<std::uint32_t> indices_of(std::span<const ScoredIndex> row) {
  std::vector<std::uint32_t> out;
  for (const auto& e : row) out.push_back(e.index);
  return out;
}

ScoreMatrix single_row(std::vector<float> values) {
  const auto n = values.size();
  return ScoreMatrix(1, n, std::move(values));
}

}  // namespace

TEST_CASE("oracle on the worked example row", "[exact]") {
  const auto row = single_row({11, 3, 10, 6, 1, 4, 8, 5, 2, 9, 7});
  const auto result = exact_topk_oracle(row, 4);
  CHECK(values_of(result.row(0)) == std::vector<float>{11, 10, 9, 8});
  CHECK(indices_of(result.row(0)) == std::vector<std::uint32_t>{0, 2, 9, 6});
  CHECK(priority_queue_topk(row, 4) == result);
}

TEST_CASE("ties break by lowest index", "[exact]") {
  const auto equal = single_row(std::vector<float>(9, 3.5F));
  CHECK(indices_of(exact_topk_oracle(equal, 2).row(0)) == std::vector<std::uint32_t>{0, 1});
  const auto fives = single_row({5, 5, 5, 1});
  CHECK(indices_of(priority_queue_topk(fives, 2).row(0)) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("k = n returns the whole row sorted", "[exact]") {
  const auto row = single_row({2, 7, 1, 8, 2, 8});
  const auto result = exact_topk_oracle(row, 6);
  CHECK(values_of(result.row(0)) == std::vector<float>{8, 8, 7, 2, 2, 1});
  CHECK(indices_of(result.row(0)) == std::vector<std::uint32_t>{3, 5, 1, 0, 4, 2});
  CHECK(priority_queue_topk(row, 6) == result);
}

TEST_CASE("ascending row selects the suffix", "[exact]") {
  std::vector<float> v(100);
  std::iota(v.begin(), v.end(), 1.0F);
  const auto result = priority_queue_topk(single_row(v), 3);
  CHECK(indices_of(result.row(0)) == std::vector<std::uint32_t>{99, 98, 97});
}

TEST_CASE("input errors", "[exact]") {
  auto row = single_row({1, 2, 3});
  CHECK_THROWS_AS(exact_topk_oracle(row, 4), TopkError);
  CHECK_THROWS_AS(priority_queue_topk(row, 0), TopkError);
  row.row(0)[1] = std::numeric_limits<float>::quiet_NaN();
  try {
    (void)priority_queue_topk(row, 1);
    FAIL("expected throw");
  } catch (const TopkError& e) {
    CHECK(e.code() == ErrorCode::NonFiniteInput);
  }
}

TEST_CASE("oracle agrees with repeated arg-max scans", "[exact][property]") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 300;
    const std::size_t k = 1 + gen() % n;
    const auto values = oracle::random_row(gen, n, trial % 2 == 0);
    const auto row = single_row(values);
    const auto result = exact_topk_oracle(row, k);
    const auto idx = indices_of(result.row(0));
    REQUIRE(std::set<std::uint32_t>(idx.begin(), idx.end()) ==
            oracle::scan_topk_indices(values, k));
    REQUIRE(std::is_sorted(result.row(0).begin(), result.row(0).end(), ranks_before));
  }
}

TEST_CASE("priority queue equals the oracle on random batches", "[exact][property]") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen() % 4096;
    const std::size_t k = trial % 3 == 0 ? 1 + gen() % n : 1 + gen() % std::min<std::size_t>(n, 80);
    const std::size_t m = 1 + gen() % 3;
    std::vector<float> data;
    for (std::size_t r = 0; r < m; ++r) {
      const auto row = oracle::random_row(gen, n, trial % 4 == 0);
      data.insert(data.end(), row.begin(), row.end());
    }
    const ScoreMatrix scores(m, n, data);
    REQUIRE(priority_queue_topk(scores, k) == exact_topk_oracle(scores, k));
  }
  // The 1x1024, k=64 instance: exactly the insertion-queue path.
  const ScoreMatrix scores(1, 1024, oracle::random_row(gen, 1024, false));
  CHECK(priority_queue_topk(scores, 64) == exact_topk_oracle(scores, 64));
}

TEST_CASE("permutation covariance and positive scale invariance", "[exact][property]") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 10 + gen() % 500;
    const std::size_t k = 1 + gen() % n;
    const auto values = oracle::random_row(gen, n, false);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    std::vector<float> permuted(n);
    for (std::size_t i = 0; i < n; ++i) permuted[i] = values[perm[i]];

    const auto base = priority_queue_topk(single_row(values), k);
    const auto moved = priority_queue_topk(single_row(permuted), k);
    std::multiset<float> base_values, moved_values;
    std::set<std::size_t> base_idx, mapped_idx;
    for (const auto& e : base.row(0)) {
      base_values.insert(e.value);
      base_idx.insert(e.index);
    }
    for (const auto& e : moved.row(0)) {
      moved_values.insert(e.value);
      mapped_idx.insert(perm[e.index]);
    }
    REQUIRE(base_values == moved_values);
    REQUIRE(base_idx == mapped_idx);  // no ties in continuous data

    std::vector<float> scaled(values);
    for (auto& v : scaled) v *= 3.0F;
    const auto scaled_result = priority_queue_topk(single_row(scaled), k);
    REQUIRE(indices_of(scaled_result.row(0)) == indices_of(base.row(0)));
  }
}

TEST_CASE("result is independent of the worker count", "[exact]") {
  std::mt19937_64 gen(3);
  std::vector<float> data;
  for (int r = 0; r < 17; ++r) {
    const auto row = oracle::random_row(gen, 333, r % 2 == 0);
    data.insert(data.end(), row.begin(), row.end());
  }
  const ScoreMatrix scores(17, 333, data);
  const auto serial = priority_queue_topk(scores, 40, 1);
  CHECK(priority_queue_topk(scores, 40, 4) == serial);
  CHECK(exact_topk_oracle(scores, 40, 3) == serial);
  CHECK(priority_queue_topk(scores, 200, 1) == priority_queue_topk(scores, 200, 5));
}

TEST_CASE("insertion queue keeps the best entries in canonical order", "[exact]") {
  InsertionQueue q(3);
  for (const auto& e : std::vector<ScoredIndex>{{1, 0}, {5, 1}, {3, 2}, {5, 3}, {4, 4}}) q.push(e);
  const auto s = q.slots();
  CHECK(s[0] == ScoredIndex{5, 1});
  CHECK(s[1] == ScoredIndex{5, 3});
  CHECK(s[2] == ScoredIndex{4, 4});

  InsertionQueue partial(4);
  partial.push({2, 9});
  CHECK(partial.slots()[0] == ScoredIndex{2, 9});
  CHECK(partial.slots()[1] == kEmptySlot);
}
