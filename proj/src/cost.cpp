/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/cost.hpp"

#include <algorithm>
#include <cmath>

#include "bucketed_topk/core.hpp"
#include "bucketed_topk/recall.hpp"

namespace bucketed_topk {

std::string_view to_string(CostModelKind model) noexcept {
  switch (model) {
    case CostModelKind::Basic: return "basic";
    case CostModelKind::Serial: return "serial";
    case CostModelKind::Parallel: return "parallel";
  }
  return "unknown";
}

std::optional<CostModelKind> parse_cost_model(std::string_view text) noexcept {
  if (text == "basic") return CostModelKind::Basic;
  if (text == "serial") return CostModelKind::Serial;
  if (text == "parallel") return CostModelKind::Parallel;
  return std::nullopt;
}

std::vector<AlgorithmCost> algorithm_costs(CostModelKind model, double n, double k, double m) {
  const double log_n = std::log2(n);
  switch (model) {
    case CostModelKind::Basic:
      return {{"heap", m * n * (std::log2(k) + 1.0)}};
    case CostModelKind::Serial:
      return {{"priority-queue", m * n * (3.0 * k - 1.0)},
              {"radix-select", m * n * (4.0 * log_n + 4.0)}};
    case CostModelKind::Parallel:
      // m does not enter: infinitely many workers absorb the batch.
      return {{"scan-max", k * (2.0 * log_n + 3.0)},
              {"radix-select", log_n * (2.0 * log_n + 16.0)}};
  }
  return {};
}

double model_cost(CostModelKind model, double n, double k, double m) {
  const auto costs = algorithm_costs(model, n, k, m);
  return std::min_element(costs.begin(), costs.end(), [](const auto& a, const auto& b) {
           return a.cost < b.cost;
         })->cost;
}

double exact_cost(CostModelKind model, std::size_t n, std::size_t k, std::size_t m) {
  require_valid(ProblemShape{m, n, k});
  return model_cost(model, static_cast<double>(n), static_cast<double>(k),
                    static_cast<double>(m));
}

bool stage2_required(std::size_t n, std::size_t k, std::size_t b, std::size_t k_b) noexcept {
  return b * k_b > k || n / b < k_b;
}

double approx_cost(CostModelKind model, std::size_t n, std::size_t k, std::size_t m,
                   std::size_t b, std::size_t k_b) {
  require_valid(ProblemShape{m, n, k}, BucketScheme{b, k_b, Assignment::Interleaved});
  const double bd = static_cast<double>(b);
  double cost = model_cost(model, static_cast<double>(n) / bd, static_cast<double>(k_b),
                           static_cast<double>(m) * bd);
  if (stage2_required(n, k, b, k_b)) {
    cost += model_cost(model, bd * static_cast<double>(k_b), static_cast<double>(k),
                       static_cast<double>(m));
  }
  return cost;
}

TradeoffCurve tradeoff_curve(CostModelKind model, std::size_t n, std::size_t k,
                             std::span<const std::size_t> k_b_list,
                             std::span<const double> ratio_list, std::size_t m) {
  TradeoffCurve curve;
  std::vector<double> ratios(ratio_list.begin(), ratio_list.end());
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());

  const ProblemShape shape{m, n, k};
  if (auto err = validate(shape)) {
    for (const std::size_t k_b : k_b_list) {
      for (const double r : ratios) curve.skipped.push_back({k_b, r, std::string(describe(*err))});
    }
    return curve;
  }
  const double exact = exact_cost(model, n, k, m);

  for (const std::size_t k_b : k_b_list) {
    for (const double ratio : ratios) {
      const double b_real = k_b == 0 ? 0.0 : ratio * static_cast<double>(k) / static_cast<double>(k_b);
      const double b_rounded = std::round(b_real);
      if (!(b_rounded >= 1.0) || std::abs(b_real - b_rounded) > 1e-9 * std::max(1.0, b_real)) {
        curve.skipped.push_back({k_b, ratio, "b = ratio*k/kb is not a positive integer"});
        continue;
      }
      const auto b = static_cast<std::size_t>(b_rounded);
      if (auto err = validate(shape, BucketScheme{b, k_b, Assignment::Interleaved})) {
        curve.skipped.push_back({k_b, ratio, std::string(describe(*err))});
        continue;
      }
      if (b * k_b > n) {
        curve.skipped.push_back({k_b, ratio, "b*kb exceeds n"});
        continue;
      }
      TradeoffPoint point;
      point.b = b;
      point.k_b = k_b;
      point.ratio = static_cast<double>(b * k_b) / static_cast<double>(k);
      point.cost = approx_cost(model, n, k, m, b, k_b);
      point.relative_cost = point.cost / exact;
      point.expected_error = expected_recall_error(k, b, k_b).expected_error;
      curve.points.push_back(point);
    }
  }
  return curve;
}

std::optional<TradeoffPoint> cheapest_within_error(std::span<const TradeoffPoint> points,
                                                   double max_error) {
  std::optional<TradeoffPoint> best;
  for (const auto& p : points) {
    if (p.expected_error > max_error) continue;
    if (!best || p.cost < best->cost) best = p;
  }
  return best;
}

}  // namespace bucketed_topk
