/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace bucketed_topk {

std::size_t default_workers() noexcept {
  if (const char* env = std::getenv(kWorkersEnvVar)) {
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace bucketed_topk
