/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/recall.hpp"

#include <algorithm>
#include <boost/math/distributions/binomial.hpp>
#include <cmath>
#include <vector>

#include "bucketed_topk/parallel.hpp"
#include "bucketed_topk/simdata.hpp"

namespace bucketed_topk {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double clamp01(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

}  // namespace

double binom_cdf(std::size_t x, std::size_t trials, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw TopkError(ErrorCode::DomainError, "p must lie in (0, 1]");
  if (x > trials) throw TopkError(ErrorCode::DomainError, "x must not exceed trials");
  if (x == trials) return 1.0;
  if (p == 1.0) return 0.0;
  const boost::math::binomial_distribution<double> dist(static_cast<double>(trials), p);
  return boost::math::cdf(dist, static_cast<double>(x));
}

RecallEstimate expected_recall_error(std::size_t k, std::size_t b, std::size_t k_b) {
  if (b == 0 || k_b == 0 || k_b > k) {
    throw TopkError(ErrorCode::DomainError, "need b >= 1 and 1 <= k_b <= k");
  }
  const double p = 1.0 / static_cast<double>(b);
  const double q = 1.0 - p;
  // mass[j] = Pr(X_i = j), X_i ~ Binom(i, p), for j < k_b; advanced one trial at a time.
  std::vector<double> mass(k_b, 0.0);
  mass[0] = 1.0;
  CompensatedSum tail;
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= k_b) {
      double cdf = 0.0;
      for (const double v : mass) cdf += v;
      tail.add(cdf);
    }
    for (std::size_t j = k_b - 1; j > 0; --j) mass[j] = mass[j] * q + mass[j - 1] * p;
    mass[0] *= q;
  }
  const double recall =
      clamp01((static_cast<double>(k_b) + tail.value()) / static_cast<double>(k));
  return {recall, 1.0 - recall};
}

double expected_recall_kb1(std::size_t k, std::size_t b) {
  if (k == 0 || b == 0) throw TopkError(ErrorCode::DomainError, "need k >= 1 and b >= 1");
  const double bd = static_cast<double>(b);
  const double kd = static_cast<double>(k);
  // 1 - ((b-1)/b)^k, evaluated without cancellation.
  const double hit = -std::expm1(kd * std::log1p(-1.0 / bd));
  return clamp01(bd / kd * hit);
}

double worst_case_recall_error(std::size_t n, std::size_t k, std::size_t b, std::size_t k_b) {
  require_valid(ProblemShape{1, n, k}, BucketScheme{b, k_b, Assignment::Interleaved});
  const double bucket_size = static_cast<double>(n) / static_cast<double>(b);
  const auto full_buckets = static_cast<double>((b * k) / n);
  const double remainder = std::fmod(static_cast<double>(k), bucket_size);
  const double kb = static_cast<double>(k_b);
  const double recovered = full_buckets * kb + std::min(kb, remainder);
  return clamp01(1.0 - recovered / static_cast<double>(k));
}

double empirical_recall(std::span<const ScoredIndex> approx, std::span<const ScoredIndex> truth,
                        std::size_t k) {
  if (approx.size() != k || truth.size() != k || k == 0) {
    throw TopkError(ErrorCode::MismatchedK, "expected two rows of " + std::to_string(k));
  }
  auto indices = [](std::span<const ScoredIndex> row) {
    std::vector<std::uint32_t> out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(e.index);
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto a = indices(approx);
  const auto t = indices(truth);
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < t.size();) {
    if (a[i] < t[j]) {
      ++i;
    } else if (t[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(common) / static_cast<double>(k);
}

double mean_recall(const TopKResult& approx, const TopKResult& truth) {
  if (approx.rows() != truth.rows() || approx.k() != truth.k()) {
    throw TopkError(ErrorCode::MismatchedK, "results differ in shape");
  }
  if (approx.rows() == 0) return 1.0;
  CompensatedSum total;
  for (std::size_t r = 0; r < approx.rows(); ++r) {
    total.add(empirical_recall(approx.row(r), truth.row(r), approx.k()));
  }
  return total.value() / static_cast<double>(approx.rows());
}

MonteCarloRecall measure_recall(std::size_t n, std::size_t k, const BucketScheme& scheme,
                                std::size_t trials, const RowSource& source,
                                std::size_t workers) {
  require_valid(ProblemShape{1, n, k}, scheme);
  if (trials == 0) throw TopkError(ErrorCode::DomainError, "trials must be >= 1");

  std::vector<double> recalls(trials);
  parallel_for(trials, workers, [&](std::size_t begin, std::size_t end) {
    ScoreMatrix row(1, n);
    for (std::size_t t = begin; t < end; ++t) {
      source(t, row.row(0));
      const auto approx = approx_topk(row, k, scheme, ExecutionMode::per_bucket(), 1);
      const auto truth = exact_topk_oracle(row, k, 1);
      recalls[t] = empirical_recall(approx.row(0), truth.row(0), k);
    }
  });

  CompensatedSum sum;
  for (const double r : recalls) sum.add(r);
  const double mean = sum.value() / static_cast<double>(trials);
  double standard_error = 0.0;
  if (trials > 1) {
    CompensatedSum squares;
    for (const double r : recalls) squares.add((r - mean) * (r - mean));
    const double variance = squares.value() / static_cast<double>(trials - 1);
    standard_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return {mean, standard_error, trials};
}

MonteCarloRecall monte_carlo_recall(const ProblemShape& shape, const BucketScheme& scheme,
                                    std::size_t trials, std::uint64_t seed, std::size_t workers) {
  const RowSource normal_rows = [seed](std::size_t trial, std::span<float> row) {
    fill_normal(row, seed, trial);
  };
  return measure_recall(shape.n, shape.k, scheme, trials, normal_rows, workers);
}

}  // namespace bucketed_topk
