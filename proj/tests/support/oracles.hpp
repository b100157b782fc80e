/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

// Test-only reference computations. None of these call into the library's
// selection, recall or cost code.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

namespace oracle {

/// Pr(X <= x), X ~ Binom(trials, p), by enumerating all 2^trials outcomes.
inline double enumerate_binom_cdf(std::size_t x, std::size_t trials, double p) {
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << trials); ++mask) {
    const auto successes = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (successes <= x) {
      total += std::pow(p, static_cast<double>(successes)) *
               std::pow(1.0 - p, static_cast<double>(trials - successes));
    }
  }
  return total;
}

/// E[recall] when each of k top values lands in one of b buckets independently
/// and uniformly, and each bucket returns at most k_b of them. Enumerates b^k.
inline double enumerate_placement_recall(std::size_t k, std::size_t b, std::size_t k_b) {
  std::vector<std::size_t> digits(k, 0);
  std::vector<std::size_t> counts(b);
  double total = 0.0;
  std::size_t outcomes = 0;
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto d : digits) ++counts[d];
    std::size_t recovered = 0;
    for (const auto c : counts) recovered += std::min(c, k_b);
    total += static_cast<double>(recovered);
    ++outcomes;
    std::size_t pos = 0;
    while (pos < k && ++digits[pos] == b) digits[pos++] = 0;
    if (pos == k) break;
  }
  return total / static_cast<double>(outcomes) / static_cast<double>(k);
}

/// Exact E[recall] on i.i.d. rows with fixed bucket sizes: the true top-k
/// occupy a uniform k-subset of positions, so bucket j holds a
/// Hypergeometric(n, sizes[j], k) number of them.
inline double finite_population_recall(std::size_t n, std::span<const std::size_t> sizes,
                                       std::size_t k, std::size_t k_b) {
  auto log_choose = [](double a, double c) {
    return std::lgamma(a + 1.0) - std::lgamma(c + 1.0) - std::lgamma(a - c + 1.0);
  };
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  double expected = 0.0;
  for (const std::size_t s : sizes) {
    const double sd = static_cast<double>(s);
    for (std::size_t x = 0; x <= std::min(s, k); ++x) {
      const double xd = static_cast<double>(x);
      if (k - x > n - s) continue;
      const double lp = log_choose(sd, xd) + log_choose(nd - sd, kd - xd) - log_choose(nd, kd);
      expected += std::exp(lp) * static_cast<double>(std::min(x, k_b));
    }
  }
  return expected / kd;
}

/// Index set of the k largest by repeated arg-max scans (ties to lowest index).
inline std::set<std::uint32_t> scan_topk_indices(std::span<const float> row, std::size_t k) {
  std::set<std::uint32_t> chosen;
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t best = row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (chosen.count(static_cast<std::uint32_t>(i))) continue;
      if (best == row.size() || row[i] > row[best]) best = i;
    }
    chosen.insert(static_cast<std::uint32_t>(best));
  }
  return chosen;
}

/// Random row with deliberate ties: values drawn from a small integer alphabet.
inline std::vector<float> random_row(std::mt19937_64& gen, std::size_t n, bool with_ties) {
  std::vector<float> row(n);
  if (with_ties) {
    std::uniform_int_distribution<int> pick(-8, 8);
    for (auto& v : row) v = static_cast<float>(pick(gen));
  } else {
    std::normal_distribution<float> normal;
    for (auto& v : row) v = normal(gen);
  }
  return row;
}

}  // namespace oracle
