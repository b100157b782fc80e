/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/core.hpp"

#include <algorithm>
#include <cmath>

namespace bucketed_topk {

std::string_view describe(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyBatch: return "m must be >= 1";
    case ErrorCode::EmptyRow: return "n must be >= 1";
    case ErrorCode::KOutOfRange: return "k must satisfy 1 <= k <= n";
    case ErrorCode::BucketsOutOfRange: return "b must satisfy 1 <= b <= n";
    case ErrorCode::BucketTopKOutOfRange: return "kb must satisfy 1 <= kb <= min(k, ceil(n/b))";
    case ErrorCode::InsufficientOversampling: return "b*kb < k";
    case ErrorCode::NonFiniteInput: return "scores must be finite";
    case ErrorCode::ShapeMismatch: return "input shape does not match";
    case ErrorCode::InsufficientCandidates: return "stage 1 produced fewer than k candidates";
    case ErrorCode::MismatchedK: return "result rows have mismatched k";
    case ErrorCode::DomainError: return "argument outside the function domain";
  }
  return "unknown error";
}

TopkError::TopkError(ErrorCode code, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(describe(code))
                                        : std::string(describe(code)) + ": " + detail),
      code_(code) {}

std::optional<ErrorCode> validate(const ProblemShape& shape) noexcept {
  if (shape.m == 0) return ErrorCode::EmptyBatch;
  if (shape.n == 0) return ErrorCode::EmptyRow;
  if (shape.k == 0 || shape.k > shape.n) return ErrorCode::KOutOfRange;
  return std::nullopt;
}

std::optional<ErrorCode> validate(const ProblemShape& shape, const BucketScheme& scheme) noexcept {
  if (auto err = validate(shape)) return err;
  if (scheme.b == 0 || scheme.b > shape.n) return ErrorCode::BucketsOutOfRange;
  const std::size_t largest_bucket = (shape.n + scheme.b - 1) / scheme.b;
  if (scheme.k_b == 0 || scheme.k_b > std::min(shape.k, largest_bucket)) {
    return ErrorCode::BucketTopKOutOfRange;
  }
  if (scheme.b * scheme.k_b < shape.k) return ErrorCode::InsufficientOversampling;
  return std::nullopt;
}

void require_valid(const ProblemShape& shape) {
  if (auto err = validate(shape)) throw TopkError(*err, {});
}

void require_valid(const ProblemShape& shape, const BucketScheme& scheme) {
  if (auto err = validate(shape, scheme)) throw TopkError(*err, {});
}

std::vector<std::size_t> bucket_sizes(std::size_t n, std::size_t b, Assignment assignment) {
  std::vector<std::size_t> sizes(b);
  if (assignment == Assignment::Interleaved) {
    const std::size_t base = n / b;
    const std::size_t extra = n % b;
    for (std::size_t j = 0; j < b; ++j) sizes[j] = base + (j < extra ? 1 : 0);
  } else {
    for (std::size_t j = 0; j < b; ++j) {
      sizes[j] = contiguous_bucket_begin(j + 1, n, b) - contiguous_bucket_begin(j, n, b);
    }
  }
  return sizes;
}

std::string_view to_string(Assignment assignment) noexcept {
  return assignment == Assignment::Interleaved ? "interleaved" : "contiguous";
}

std::optional<Assignment> parse_assignment(std::string_view text) noexcept {
  if (text == "interleaved") return Assignment::Interleaved;
  if (text == "contiguous") return Assignment::Contiguous;
  return std::nullopt;
}

ScoreView::ScoreView(std::span<const float> data, std::size_t rows, std::size_t cols)
    : data_(data), rows_(rows), cols_(cols) {
  if (data.size() != rows * cols) {
    throw TopkError(ErrorCode::ShapeMismatch, "view size != rows * cols");
  }
}

ScoreMatrix::ScoreMatrix(std::size_t rows, std::size_t cols, std::vector<float> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw TopkError(ErrorCode::ShapeMismatch, "matrix size != rows * cols");
  }
}

void require_finite(ScoreView scores) {
  const auto data = scores.data();
  const auto bad = std::find_if(data.begin(), data.end(), [](float v) { return !std::isfinite(v); });
  if (bad != data.end()) {
    const auto pos = static_cast<std::size_t>(bad - data.begin());
    throw TopkError(ErrorCode::NonFiniteInput, "row " + std::to_string(pos / scores.cols()) +
                                                   ", column " +
                                                   std::to_string(pos % scores.cols()));
  }
}

}  // namespace bucketed_topk
