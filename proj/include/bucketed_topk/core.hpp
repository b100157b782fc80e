/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file core.hpp
 *  \brief Problem shapes, bucket schemes, validation and bucket assignment.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bucketed_topk {

/** \brief Batch of m rows, n scores per row, k selected per row. */
struct ProblemShape {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 1;
};

enum class Assignment : std::uint8_t {
  Interleaved,  // bucket(i) = i mod b
  Contiguous,   // bucket(i) = floor(b * i / n)
};

/** \brief Stage-1 layout: b buckets, top-k_b kept per bucket. */
struct BucketScheme {
  std::size_t b = 1;
  std::size_t k_b = 1;
  Assignment assignment = Assignment::Interleaved;
};

/** \brief A score together with its zero-based position in the input row. */
struct ScoredIndex {
  float value = 0.0F;
  std::uint32_t index = 0;

  friend bool operator==(const ScoredIndex&, const ScoredIndex&) = default;
};

/// Canonical total order: larger value first, lower index breaks ties.
[[nodiscard]] constexpr bool ranks_before(const ScoredIndex& a, const ScoredIndex& b) noexcept {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

enum class ErrorCode : std::uint8_t {
  EmptyBatch,              // m == 0
  EmptyRow,                // n == 0
  KOutOfRange,             // k == 0 or k > n
  BucketsOutOfRange,       // b == 0 or b > n
  BucketTopKOutOfRange,    // k_b == 0 or k_b > min(k, ceil(n / b))
  InsufficientOversampling,  // b * k_b < k
  NonFiniteInput,
  ShapeMismatch,
  InsufficientCandidates,
  MismatchedK,
  DomainError,
};

/// Short, stable description of the violated constraint (used in CLI messages).
[[nodiscard]] std::string_view describe(ErrorCode code) noexcept;

/** \brief Raised by selection, recall and cost routines on contract violations. */
class TopkError : public std::runtime_error {
 public:
  TopkError(ErrorCode code, const std::string& detail);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[nodiscard]] std::optional<ErrorCode> validate(const ProblemShape& shape) noexcept;

/// Joint validation of a shape and a scheme. Empty optional means ok.
[[nodiscard]] std::optional<ErrorCode> validate(const ProblemShape& shape,
                                                const BucketScheme& scheme) noexcept;

/// Throws TopkError when validate() reports a problem.
void require_valid(const ProblemShape& shape, const BucketScheme& scheme);
void require_valid(const ProblemShape& shape);

/// Preconditions: i < n, 1 <= b <= n.
[[nodiscard]] constexpr std::size_t bucket_of(std::size_t i, std::size_t n, std::size_t b,
                                              Assignment assignment) noexcept {
  if (assignment == Assignment::Interleaved) return i % b;
  return static_cast<std::size_t>((static_cast<unsigned __int128>(b) * i) / n);
}

/// First input position owned by contiguous bucket j (j may equal b, giving n).
[[nodiscard]] constexpr std::size_t contiguous_bucket_begin(std::size_t j, std::size_t n,
                                                            std::size_t b) noexcept {
  // smallest i with floor(b*i/n) >= j, i.e. ceil(j*n/b)
  const auto num = static_cast<unsigned __int128>(j) * n;
  return static_cast<std::size_t>((num + b - 1) / b);
}

[[nodiscard]] std::vector<std::size_t> bucket_sizes(std::size_t n, std::size_t b,
                                                    Assignment assignment);

[[nodiscard]] std::string_view to_string(Assignment assignment) noexcept;
[[nodiscard]] std::optional<Assignment> parse_assignment(std::string_view text) noexcept;

/** \brief Read-only row-major view of an m x n score matrix. */
class ScoreView {
 public:
  ScoreView(std::span<const float> data, std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::span<const float> row(std::size_t r) const noexcept {
    return data_.subspan(r * cols_, cols_);
  }
  [[nodiscard]] std::span<const float> data() const noexcept { return data_; }

 private:
  std::span<const float> data_;
  std::size_t rows_;
  std::size_t cols_;
};

/** \brief Owning row-major score matrix. */
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols, float fill = 0.0F)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  ScoreMatrix(std::size_t rows, std::size_t cols, std::vector<float> data);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::span<float> row(std::size_t r) noexcept {
    return std::span<float>(data_).subspan(r * cols_, cols_);
  }
  [[nodiscard]] std::span<const float> row(std::size_t r) const noexcept {
    return std::span<const float>(data_).subspan(r * cols_, cols_);
  }
  [[nodiscard]] std::span<float> data() noexcept { return data_; }
  [[nodiscard]] std::span<const float> data() const noexcept { return data_; }

  [[nodiscard]] ScoreView view() const { return ScoreView(data_, rows_, cols_); }
  operator ScoreView() const { return view(); }  // NOLINT(google-explicit-constructor)

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> data_;
};

/// Throws TopkError(NonFiniteInput) if any score is NaN or infinite.
void require_finite(ScoreView scores);

}  // namespace bucketed_topk
