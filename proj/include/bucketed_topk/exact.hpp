/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file exact.hpp
 *  \brief Exact top-k: full-sort reference and scanning insertion-sorted queue.
 */

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "bucketed_topk/core.hpp"

namespace bucketed_topk {

/**
 * \brief m rows of exactly k entries, each row in canonical order
 *        (value descending, index ascending).
 */
class TopKResult {
 public:
  TopKResult() = default;
  TopKResult(std::size_t rows, std::size_t k)
      : rows_(rows), k_(k), entries_(rows * k) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] std::span<const ScoredIndex> row(std::size_t r) const noexcept {
    return std::span<const ScoredIndex>(entries_).subspan(r * k_, k_);
  }
  [[nodiscard]] std::span<ScoredIndex> row(std::size_t r) noexcept {
    return std::span<ScoredIndex>(entries_).subspan(r * k_, k_);
  }

  friend bool operator==(const TopKResult&, const TopKResult&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t k_ = 0;
  std::vector<ScoredIndex> entries_;
};

/// Entry that ranks after every finite score; marks an unused queue slot.
inline constexpr ScoredIndex kEmptySlot{-std::numeric_limits<float>::infinity(),
                                        std::numeric_limits<std::uint32_t>::max()};

/// Inserts into a best-first run (slots pre-filled with kEmptySlot), dropping the worst.
inline void queue_push(std::span<ScoredIndex> slots, ScoredIndex item) noexcept {
  std::size_t pos = slots.size() - 1;
  if (!ranks_before(item, slots[pos])) return;
  while (pos > 0 && ranks_before(item, slots[pos - 1])) {
    slots[pos] = slots[pos - 1];
    --pos;
  }
  slots[pos] = item;
}

/// Same as queue_push with a compile-time capacity; the k_b <= 4 fast path.
template <std::size_t Capacity>
inline void queue_push_fixed(ScoredIndex* slots, ScoredIndex item) noexcept {
  if (!ranks_before(item, slots[Capacity - 1])) return;
  std::size_t pos = Capacity - 1;
  while (pos > 0 && ranks_before(item, slots[pos - 1])) {
    slots[pos] = slots[pos - 1];
    --pos;
  }
  slots[pos] = item;
}

/** \brief Bounded max priority queue kept as a sorted array with insertion-sort insertion. */
class InsertionQueue {
 public:
  explicit InsertionQueue(std::size_t capacity) : slots_(capacity, kEmptySlot) {}

  void push(ScoredIndex item) noexcept { queue_push(slots_, item); }
  void clear() noexcept { std::fill(slots_.begin(), slots_.end(), kEmptySlot); }

  /// Best-first contents; unused slots hold kEmptySlot.
  [[nodiscard]] std::span<const ScoredIndex> slots() const noexcept { return slots_; }

 private:
  std::vector<ScoredIndex> slots_;
};

/// Above this k, priority_queue_topk switches to partition + sort internally.
inline constexpr std::size_t kQueueScanMaxK = 64;

/// Reference top-k by full sort of every row. Ground truth for recall.
[[nodiscard]] TopKResult exact_topk_oracle(ScoreView scores, std::size_t k,
                                           std::size_t workers = 0);

/// Single-pass scan of each row through a length-k insertion queue.
[[nodiscard]] TopKResult priority_queue_topk(ScoreView scores, std::size_t k,
                                             std::size_t workers = 0);

/// Canonical top-k of arbitrary scored entries; out.size() == k <= items.size().
void select_topk(std::span<const ScoredIndex> items, std::span<ScoredIndex> out);

}  // namespace bucketed_topk
