/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bucketed_topk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `bucketed-topk` tool. args excludes the program name.
/// Subcommands: run, tradeoff, recall, correlation, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bucketed_topk::cli
