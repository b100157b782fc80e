/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include <iostream>
#include <string>
#include <vector>

#include "bucketed_topk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bucketed_topk::cli::run(args, std::cout, std::cerr);
}
