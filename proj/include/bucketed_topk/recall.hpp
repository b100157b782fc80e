/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file recall.hpp
 *  \brief Analytic and measured recall of bucketed top-k.
 *
 *  Recall is |returned indices ∩ true top-k indices| / k. The analytic model
 *  places each of the k true top values in a uniformly random bucket; the
 *  i-th value is recovered when its bucket holds fewer than k_b of the
 *  previous ones, which happens with probability F(k_b - 1; i, 1/b), F
 *  being the binomial CDF. Summing over i gives
 *
 *      E[recall] = (k_b + sum_{i=k_b}^{k-1} F(k_b - 1; i, 1/b)) / k.
 *
 *  The model is exact when buckets are much larger than k_b; with small
 *  buckets real data spreads more evenly than independent placement, so
 *  the model's error is an upper bound there.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "bucketed_topk/approx.hpp"
#include "bucketed_topk/core.hpp"
#include "bucketed_topk/exact.hpp"

namespace bucketed_topk {

struct RecallEstimate {
  double expected_recall = 1.0;
  double expected_error = 0.0;
};

/// Pr(X <= x) for X ~ Binom(trials, p). Throws TopkError(DomainError) for p outside (0, 1] or x > trials.
[[nodiscard]] double binom_cdf(std::size_t x, std::size_t trials, double p);

/// Analytic expected recall for k top values spread over b buckets keeping k_b each.
/// Requires b >= 1 and 1 <= k_b <= k.
[[nodiscard]] RecallEstimate expected_recall_error(std::size_t k, std::size_t b, std::size_t k_b);

/// Closed form for k_b = 1: (b/k) (1 - ((b-1)/b)^k).
[[nodiscard]] double expected_recall_kb1(std::size_t k, std::size_t b);

/// Recall error when the top-k crowd into as few buckets as possible.
[[nodiscard]] double worst_case_recall_error(std::size_t n, std::size_t k, std::size_t b,
                                             std::size_t k_b);

/// |approx ∩ truth| / k over index sets. Throws TopkError(MismatchedK) on size mismatch.
[[nodiscard]] double empirical_recall(std::span<const ScoredIndex> approx,
                                      std::span<const ScoredIndex> truth, std::size_t k);

/// Mean row recall of `approx` against `truth`.
[[nodiscard]] double mean_recall(const TopKResult& approx, const TopKResult& truth);

struct MonteCarloRecall {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

/// Fills row `trial` of a recall experiment; must depend only on its arguments.
using RowSource = std::function<void(std::size_t trial, std::span<float> row)>;

/**
 * Runs approx_topk and exact_topk_oracle on `trials` rows drawn from `source`
 * and summarises the per-row recall. Schedule independent.
 */
[[nodiscard]] MonteCarloRecall measure_recall(std::size_t n, std::size_t k,
                                              const BucketScheme& scheme, std::size_t trials,
                                              const RowSource& source, std::size_t workers = 0);

/// measure_recall over i.i.d. N(0,1) rows; trial t uses stream t of `seed`.
[[nodiscard]] MonteCarloRecall monte_carlo_recall(const ProblemShape& shape,
                                                  const BucketScheme& scheme, std::size_t trials,
                                                  std::uint64_t seed, std::size_t workers = 0);

}  // namespace bucketed_topk
