/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file cost.hpp
 *  \brief Abstract operation-count cost models for exact and bucketed top-k.
 *
 *  Each model prices a few exact algorithms and takes the cheapest:
 *
 *    Basic     heap scan                m n (log2 k + 1)
 *    Serial    PriorityQueue            m n (3k - 1)
 *              RadixSelect              m n (4 log2 n + 4)
 *    Parallel  ScanMax                  k (2 log2 n + 3)
 *              RadixSelect              log2 n (2 log2 n + 16)
 *
 *  Residual lower-order terms are dropped, logs are real valued and n may be
 *  fractional (n / b in stage 1). The bucketed cost adds stage 1 on m*b rows
 *  of n/b elements to stage 2, an exact top-k over b*k_b candidates, which is
 *  charged only when stage 2 actually runs.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bucketed_topk {

enum class CostModelKind { Basic, Serial, Parallel };

[[nodiscard]] std::string_view to_string(CostModelKind model) noexcept;
[[nodiscard]] std::optional<CostModelKind> parse_cost_model(std::string_view text) noexcept;

struct AlgorithmCost {
  std::string_view algorithm;
  double cost = 0.0;
};

/// Every algorithm the model prices, in table order. Real-valued, unchecked.
[[nodiscard]] std::vector<AlgorithmCost> algorithm_costs(CostModelKind model, double n, double k,
                                                         double m);

/// Minimum over algorithm_costs. Real-valued, unchecked.
[[nodiscard]] double model_cost(CostModelKind model, double n, double k, double m);

/// Exact top-k cost. Throws TopkError when k > n, k == 0 or m == 0.
[[nodiscard]] double exact_cost(CostModelKind model, std::size_t n, std::size_t k, std::size_t m);

/// True when the bucketed algorithm must run stage 2: b*k_b > k, or some bucket
/// holds fewer than k_b elements.
[[nodiscard]] bool stage2_required(std::size_t n, std::size_t k, std::size_t b,
                                   std::size_t k_b) noexcept;

/// Bucketed top-k cost; throws TopkError for an invalid scheme.
[[nodiscard]] double approx_cost(CostModelKind model, std::size_t n, std::size_t k, std::size_t m,
                                 std::size_t b, std::size_t k_b);

struct TradeoffPoint {
  std::size_t b = 0;
  std::size_t k_b = 0;
  double ratio = 0.0;  // b * k_b / k
  double cost = 0.0;
  double relative_cost = 0.0;  // cost / exact cost, same model and shape
  double expected_error = 0.0;
};

struct SkippedPoint {
  std::size_t k_b = 0;
  double ratio = 0.0;
  std::string reason;
};

struct TradeoffCurve {
  std::vector<TradeoffPoint> points;  // grouped by k_b (input order), ratio ascending
  std::vector<SkippedPoint> skipped;
};

/// One point per (k_b, ratio) with b = ratio * k / k_b integral and valid.
[[nodiscard]] TradeoffCurve tradeoff_curve(CostModelKind model, std::size_t n, std::size_t k,
                                           std::span<const std::size_t> k_b_list,
                                           std::span<const double> ratio_list,
                                           std::size_t m = 1);

/// Lowest-cost point with expected_error <= max_error, if any.
[[nodiscard]] std::optional<TradeoffPoint> cheapest_within_error(
    std::span<const TradeoffPoint> points, double max_error);

}  // namespace bucketed_topk
