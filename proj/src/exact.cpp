/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/exact.hpp"

#include <algorithm>
#include <numeric>

#include "bucketed_topk/parallel.hpp"

namespace bucketed_topk {
namespace {

void check_inputs(ScoreView scores, std::size_t k) {
  require_valid(ProblemShape{scores.rows(), scores.cols(), k});
  require_finite(scores);
}

// Reorders `items`; the best out.size() entries land in `out` in canonical order.
void partition_select(std::span<ScoredIndex> items, std::span<ScoredIndex> out) {
  const auto kth = items.begin() + static_cast<std::ptrdiff_t>(out.size());
  if (kth != items.end()) std::nth_element(items.begin(), kth, items.end(), ranks_before);
  std::sort(items.begin(), kth, ranks_before);
  std::copy(items.begin(), kth, out.begin());
}

}  // namespace

TopKResult exact_topk_oracle(ScoreView scores, std::size_t k, std::size_t workers) {
  check_inputs(scores, k);
  TopKResult result(scores.rows(), k);
  parallel_for(scores.rows(), workers, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> order(scores.cols());
    for (std::size_t r = begin; r < end; ++r) {
      const auto row = scores.row(r);
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return ranks_before({row[a], a}, {row[b], b});
      });
      auto out = result.row(r);
      for (std::size_t j = 0; j < k; ++j) out[j] = {row[order[j]], order[j]};
    }
  });
  return result;
}

TopKResult priority_queue_topk(ScoreView scores, std::size_t k, std::size_t workers) {
  check_inputs(scores, k);
  TopKResult result(scores.rows(), k);
  parallel_for(scores.rows(), workers, [&](std::size_t begin, std::size_t end) {
    std::vector<ScoredIndex> items;
    for (std::size_t r = begin; r < end; ++r) {
      const auto row = scores.row(r);
      auto out = result.row(r);
      if (k > kQueueScanMaxK) {
        items.resize(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
          items[i] = {row[i], static_cast<std::uint32_t>(i)};
        }
        partition_select(items, out);
        continue;
      }
      std::fill(out.begin(), out.end(), kEmptySlot);
      for (std::size_t i = 0; i < row.size(); ++i) {
        queue_push(out, {row[i], static_cast<std::uint32_t>(i)});
      }
    }
  });
  return result;
}

void select_topk(std::span<const ScoredIndex> items, std::span<ScoredIndex> out) {
  if (out.size() > items.size()) {
    throw TopkError(ErrorCode::InsufficientCandidates,
                    std::to_string(items.size()) + " < " + std::to_string(out.size()));
  }
  if (out.empty()) return;
  if (out.size() <= kQueueScanMaxK) {
    std::fill(out.begin(), out.end(), kEmptySlot);
    for (const auto& item : items) queue_push(out, item);
    return;
  }
  std::vector<ScoredIndex> scratch(items.begin(), items.end());
  partition_select(scratch, out);
}

}  // namespace bucketed_topk
