/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/approx.hpp"

#include <algorithm>
#include <iterator>

#include "bucketed_topk/parallel.hpp"

namespace bucketed_topk {
namespace {

// Positions of bucket j, in position-within-bucket order.
struct BucketWalk {
  std::size_t first;
  std::size_t stride;
  std::size_t size;

  [[nodiscard]] std::size_t at(std::size_t p) const noexcept { return first + p * stride; }
};

BucketWalk walk(std::size_t j, std::size_t n, std::size_t b, Assignment assignment) noexcept {
  if (assignment == Assignment::Interleaved) {
    return {j, b, n / b + (j < n % b ? 1 : 0)};
  }
  const std::size_t begin = contiguous_bucket_begin(j, n, b);
  return {begin, 1, contiguous_bucket_begin(j + 1, n, b) - begin};
}

struct DynamicPush {
  std::size_t capacity;
  void operator()(ScoredIndex* slots, ScoredIndex item) const noexcept {
    queue_push(std::span<ScoredIndex>(slots, capacity), item);
  }
};

template <std::size_t Capacity>
struct FixedPush {
  void operator()(ScoredIndex* slots, ScoredIndex item) const noexcept {
    queue_push_fixed<Capacity>(slots, item);
  }
};

template <typename Fn>
void with_pusher(std::size_t k_b, Fn&& fn) {
  switch (k_b) {
    case 1: fn(FixedPush<1>{}); break;
    case 2: fn(FixedPush<2>{}); break;
    case 3: fn(FixedPush<3>{}); break;
    case 4: fn(FixedPush<4>{}); break;
    default: fn(DynamicPush{k_b}); break;
  }
}

// Scans buckets [j0, j1) of one row into `slots` (b * k_b, bucket-major).
template <typename Push>
void scan_buckets(std::span<const float> row, const BucketScheme& scheme, std::size_t j0,
                  std::size_t j1, ScoredIndex* slots, Push push) {
  const std::size_t n = row.size();
  const std::size_t b = scheme.b;
  const std::size_t k_b = scheme.k_b;
  if (scheme.assignment == Assignment::Interleaved) {
    // Sweep the row in strides of b so each pass touches a contiguous slice.
    for (std::size_t base = 0; base < n; base += b) {
      const std::size_t stop = std::min(j1, n - base);
      for (std::size_t j = j0; j < stop; ++j) {
        const std::size_t i = base + j;
        push(slots + j * k_b, ScoredIndex{row[i], static_cast<std::uint32_t>(i)});
      }
    }
    return;
  }
  for (std::size_t j = j0; j < j1; ++j) {
    const std::size_t end = contiguous_bucket_begin(j + 1, n, b);
    for (std::size_t i = contiguous_bucket_begin(j, n, b); i < end; ++i) {
      push(slots + j * k_b, ScoredIndex{row[i], static_cast<std::uint32_t>(i)});
    }
  }
}

void per_bucket_stage(ScoreView scores, const BucketScheme& scheme, std::size_t workers,
                      std::vector<ScoredIndex>& slots) {
  const std::size_t m = scores.rows();
  const std::size_t b = scheme.b;
  const std::size_t per_row = b * scheme.k_b;
  const std::size_t lanes = resolve_workers(workers);
  const std::size_t block = std::max<std::size_t>(1024, (b + 4 * lanes - 1) / (4 * lanes));
  const std::size_t blocks = (b + block - 1) / block;
  with_pusher(scheme.k_b, [&](auto push) {
    parallel_for(m * blocks, workers, [&](std::size_t begin, std::size_t end) {
      for (std::size_t task = begin; task < end; ++task) {
        const std::size_t r = task / blocks;
        const std::size_t j0 = (task % blocks) * block;
        scan_buckets(scores.row(r), scheme, j0, std::min(b, j0 + block),
                     slots.data() + r * per_row, push);
      }
    });
  });
}

void chunked_stage(ScoreView scores, const BucketScheme& scheme, std::size_t chunks,
                   std::size_t workers, std::vector<ScoredIndex>& slots) {
  const std::size_t n = scores.cols();
  const std::size_t b = scheme.b;
  const std::size_t k_b = scheme.k_b;
  std::vector<ScoredIndex> chunk_slots(b * chunks * k_b);
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    const auto row = scores.row(r);
    std::fill(chunk_slots.begin(), chunk_slots.end(), kEmptySlot);
    with_pusher(k_b, [&](auto push) {
      parallel_for(b * chunks, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t task = begin; task < end; ++task) {
          const std::size_t j = task / chunks;
          const std::size_t q = task % chunks;
          const BucketWalk bucket = walk(j, n, b, scheme.assignment);
          ScoredIndex* queue = chunk_slots.data() + task * k_b;
          for (std::size_t p = q; p < bucket.size; p += chunks) {
            const std::size_t i = bucket.at(p);
            push(queue, ScoredIndex{row[i], static_cast<std::uint32_t>(i)});
          }
        }
      });
    });
    // Single merge per bucket: sort the c * k_b survivors, keep the best k_b.
    ScoredIndex* row_slots = slots.data() + r * b * k_b;
    parallel_for(b, workers, [&](std::size_t begin, std::size_t end) {
      std::vector<ScoredIndex> merged;
      for (std::size_t j = begin; j < end; ++j) {
        const auto group = std::span<const ScoredIndex>(chunk_slots).subspan(j * chunks * k_b,
                                                                              chunks * k_b);
        merged.clear();
        std::copy_if(group.begin(), group.end(), std::back_inserter(merged),
                     [](const ScoredIndex& e) { return !(e == kEmptySlot); });
        std::sort(merged.begin(), merged.end(), ranks_before);
        const std::size_t keep = std::min(k_b, merged.size());
        std::copy_n(merged.begin(), keep, row_slots + j * k_b);
      }
    });
  }
}

}  // namespace

ExecutionMode ExecutionMode::chunked_merge(std::size_t chunks) {
  if (chunks < 2) {
    throw TopkError(ErrorCode::DomainError, "chunked merge needs at least 2 chunks per bucket");
  }
  return {Kind::ChunkedMerge, chunks};
}

std::string to_string(const ExecutionMode& mode) {
  if (mode.kind == ExecutionMode::Kind::PerBucket) return "per-bucket";
  return "chunked-" + std::to_string(mode.chunks_per_bucket);
}

Stage1Candidates stage1(ScoreView scores, std::size_t k, const BucketScheme& scheme,
                        ExecutionMode mode, std::size_t workers) {
  const ProblemShape shape{scores.rows(), scores.cols(), k};
  require_valid(shape, scheme);
  require_finite(scores);
  if (mode.kind == ExecutionMode::Kind::ChunkedMerge && mode.chunks_per_bucket < 2) {
    throw TopkError(ErrorCode::DomainError, "chunked merge needs at least 2 chunks per bucket");
  }

  const std::size_t m = shape.m;
  const std::size_t b = scheme.b;
  const std::size_t k_b = scheme.k_b;
  std::vector<ScoredIndex> slots(m * b * k_b, kEmptySlot);
  if (mode.kind == ExecutionMode::Kind::PerBucket) {
    per_bucket_stage(scores, scheme, workers, slots);
  } else {
    chunked_stage(scores, scheme, mode.chunks_per_bucket, workers, slots);
  }

  Stage1Candidates out;
  out.rows = m;
  out.bucket_offsets.resize(b + 1);
  const auto sizes = bucket_sizes(shape.n, b, scheme.assignment);
  bool ragged = false;
  for (std::size_t j = 0; j < b; ++j) {
    const std::size_t keep = std::min(k_b, sizes[j]);
    ragged = ragged || keep < k_b;
    out.bucket_offsets[j + 1] = out.bucket_offsets[j] + keep;
  }
  out.per_row = out.bucket_offsets[b];
  if (!ragged) {
    out.entries = std::move(slots);
    return out;
  }
  out.entries.resize(m * out.per_row);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < b; ++j) {
      const std::size_t keep = out.bucket_offsets[j + 1] - out.bucket_offsets[j];
      std::copy_n(slots.begin() + static_cast<std::ptrdiff_t>((r * b + j) * k_b), keep,
                  out.entries.begin() +
                      static_cast<std::ptrdiff_t>(r * out.per_row + out.bucket_offsets[j]));
    }
  }
  return out;
}

TopKResult approx_topk(ScoreView scores, std::size_t k, const BucketScheme& scheme,
                       ExecutionMode mode, std::size_t workers) {
  const Stage1Candidates candidates = stage1(scores, k, scheme, mode, workers);
  if (candidates.per_row < k) {
    throw TopkError(ErrorCode::InsufficientCandidates,
                    std::to_string(candidates.per_row) + " < " + std::to_string(k));
  }
  const bool skip_stage2 = candidates.per_row == k;
  TopKResult result(candidates.rows, k);
  parallel_for(candidates.rows, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      auto out = result.row(r);
      if (skip_stage2) {
        const auto row = candidates.row(r);
        std::copy(row.begin(), row.end(), out.begin());
        std::sort(out.begin(), out.end(), ranks_before);
      } else {
        select_topk(candidates.row(r), out);
      }
    }
  });
  return result;
}

ExecutionMode select_mode(const ProblemShape& shape, const BucketScheme& scheme,
                          std::size_t lanes) noexcept {
  const std::size_t largest_bucket = (shape.n + scheme.b - 1) / scheme.b;
  if (shape.m * scheme.b >= lanes || largest_bucket < kMinChunkedBucketSize) {
    return ExecutionMode::per_bucket();
  }
  return {ExecutionMode::Kind::ChunkedMerge, kDefaultChunksPerBucket};
}

}  // namespace bucketed_topk
