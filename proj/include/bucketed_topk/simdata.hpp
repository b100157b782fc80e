/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file simdata.hpp
 *  \brief Reproducible synthetic inputs.
 *
 *  Every stream comes from Philox4x32-10 (Salmon et al., counter-based),
 *  keyed by the 64-bit seed with the 64-bit stream id in the upper counter
 *  words. Normals use Boost.Random's ziggurat normal_distribution on top of
 *  that engine and integers use Boost's uniform_int_distribution, both of
 *  which are platform independent. A (seed, stream) pair therefore names the
 *  same sequence on every platform.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bucketed_topk/core.hpp"

namespace bucketed_topk {

/** \brief Philox4x32-10 counter-based generator; a UniformRandomBitGenerator. */
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// The raw 10-round bijection; exposed for known-answer tests.
  [[nodiscard]] static Block encrypt(Block counter, Key key) noexcept;

 private:
  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Block buffer_{};
  std::size_t used_ = 4;
};

/// Fills `row` with N(0,1) draws from stream `stream` of `seed`.
void fill_normal(std::span<float> row, std::uint64_t seed, std::uint64_t stream);

/// m x n matrix of N(0,1) draws; row r is stream first_stream + r.
[[nodiscard]] ScoreMatrix iid_normal(std::size_t m, std::size_t n, std::uint64_t seed,
                                     std::uint64_t first_stream = 0, std::size_t workers = 0);

/// Refills `out` in place; same values as iid_normal for the same arguments.
void fill_iid_normal(ScoreMatrix& out, std::uint64_t seed, std::uint64_t first_stream = 0,
                     std::size_t workers = 0);

/**
 * Stationary AR(1) sequence: x_0 ~ N(0,1), x_i = rho x_{i-1} + sqrt(1 - rho^2) e_i.
 * Cov(x_i, x_j) = rho^|i-j|. Throws TopkError(DomainError) unless 0 <= rho < 1.
 */
[[nodiscard]] std::vector<float> ar1_sequence(std::size_t n, double rho, std::uint64_t seed,
                                              std::uint64_t stream = 0);

/// Uniform random permutation of [0, n) (Fisher-Yates).
[[nodiscard]] std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed,
                                                          std::uint64_t stream = 0);

template <typename T>
[[nodiscard]] std::vector<T> permute(const std::vector<T>& values, std::uint64_t seed,
                                     std::uint64_t stream = 0) {
  const auto order = random_permutation(values.size(), seed, stream);
  std::vector<T> out;
  out.reserve(values.size());
  for (const std::size_t i : order) out.push_back(values[i]);
  return out;
}

}  // namespace bucketed_topk
