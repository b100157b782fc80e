/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file approx.hpp
 *  \brief Two-stage bucketed approximate top-k.
 *
 *  Stage 1 splits each row into b buckets and keeps the top k_b entries of
 *  every bucket. Stage 2 runs an exact top-k over the concatenated
 *  candidates, and is skipped when stage 1 already yields exactly k of them.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bucketed_topk/core.hpp"
#include "bucketed_topk/exact.hpp"

namespace bucketed_topk {

/**
 * \brief How stage 1 spreads work inside a bucket.
 *
 * PerBucket: one worker scans a whole bucket.
 * ChunkedMerge: a bucket is split into `chunks_per_bucket` interleaved chunks
 * (chunk = position-within-bucket mod c), each keeps its own k_b queue, and
 * the c * k_b survivors are merged once by sorting.
 */
struct ExecutionMode {
  enum class Kind { PerBucket, ChunkedMerge };

  Kind kind = Kind::PerBucket;
  std::size_t chunks_per_bucket = 1;

  static constexpr ExecutionMode per_bucket() noexcept { return {}; }
  /// Throws TopkError(DomainError) when chunks < 2.
  static ExecutionMode chunked_merge(std::size_t chunks);

  friend bool operator==(const ExecutionMode&, const ExecutionMode&) = default;
};

[[nodiscard]] std::string to_string(const ExecutionMode& mode);

/// Chunk count used by select_mode when it picks ChunkedMerge.
inline constexpr std::size_t kDefaultChunksPerBucket = 64;
/// Buckets smaller than this are always scanned by a single worker.
inline constexpr std::size_t kMinChunkedBucketSize = 64;

/** \brief Stage-1 output: per row, each bucket's top entries in bucket-id order. */
struct Stage1Candidates {
  std::size_t rows = 0;
  std::size_t per_row = 0;
  /// bucket j occupies [bucket_offsets[j], bucket_offsets[j+1]) within a row; size b+1.
  std::vector<std::size_t> bucket_offsets;
  std::vector<ScoredIndex> entries;

  [[nodiscard]] std::span<const ScoredIndex> row(std::size_t r) const noexcept {
    return std::span<const ScoredIndex>(entries).subspan(r * per_row, per_row);
  }
};

/// Stage 1 alone. Within each bucket entries are in canonical order.
[[nodiscard]] Stage1Candidates stage1(ScoreView scores, std::size_t k, const BucketScheme& scheme,
                                      ExecutionMode mode = ExecutionMode::per_bucket(),
                                      std::size_t workers = 0);

/// Full two-stage selection. Output rows are canonical and carry original indices.
[[nodiscard]] TopKResult approx_topk(ScoreView scores, std::size_t k, const BucketScheme& scheme,
                                     ExecutionMode mode = ExecutionMode::per_bucket(),
                                     std::size_t workers = 0);

/// PerBucket when m*b >= lanes or buckets hold < 64 elements, else ChunkedMerge(64).
[[nodiscard]] ExecutionMode select_mode(const ProblemShape& shape, const BucketScheme& scheme,
                                        std::size_t lanes) noexcept;

}  // namespace bucketed_topk
