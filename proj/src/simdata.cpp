/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/simdata.hpp"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <cmath>
#include <numeric>

#include "bucketed_topk/parallel.hpp"

namespace bucketed_topk {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53U;
constexpr std::uint32_t kMul1 = 0xCD9E8D57U;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9U;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85U;
constexpr int kRounds = 10;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

Philox4x32::Block Philox4x32::encrypt(Block ctr, Key key) noexcept {
  for (int round = 0; round < kRounds; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0 = 0, lo0 = 0, hi1 = 0, lo1 = 0;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

Philox4x32::result_type Philox4x32::operator()() noexcept {
  if (used_ == buffer_.size()) {
    const Block counter{static_cast<std::uint32_t>(block_index_),
                        static_cast<std::uint32_t>(block_index_ >> 32),
                        static_cast<std::uint32_t>(stream_),
                        static_cast<std::uint32_t>(stream_ >> 32)};
    buffer_ = encrypt(counter, key_);
    ++block_index_;
    used_ = 0;
  }
  return buffer_[used_++];
}

void fill_normal(std::span<float> row, std::uint64_t seed, std::uint64_t stream) {
  Philox4x32 engine(seed, stream);
  boost::random::normal_distribution<double> normal;
  for (float& v : row) v = static_cast<float>(normal(engine));
}

void fill_iid_normal(ScoreMatrix& out, std::uint64_t seed, std::uint64_t first_stream,
                     std::size_t workers) {
  parallel_for(out.rows(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) fill_normal(out.row(r), seed, first_stream + r);
  });
}

ScoreMatrix iid_normal(std::size_t m, std::size_t n, std::uint64_t seed,
                       std::uint64_t first_stream, std::size_t workers) {
  ScoreMatrix out(m, n);
  fill_iid_normal(out, seed, first_stream, workers);
  return out;
}

std::vector<float> ar1_sequence(std::size_t n, double rho, std::uint64_t seed,
                                std::uint64_t stream) {
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw TopkError(ErrorCode::DomainError, "rho must lie in [0, 1)");
  }
  Philox4x32 engine(seed, stream);
  boost::random::normal_distribution<double> normal;
  const double innovation = std::sqrt(1.0 - rho * rho);
  std::vector<float> out(n);
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double eps = normal(engine);
    x = i == 0 ? eps : rho * x + innovation * eps;
    out[i] = static_cast<float>(x);
  }
  return out;
}

std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed,
                                            std::uint64_t stream) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Philox4x32 engine(seed, stream);
  for (std::size_t i = n; i > 1; --i) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(engine)]);
  }
  return order;
}

}  // namespace bucketed_topk
