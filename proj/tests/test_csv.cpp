/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "bucketed_topk/csv.hpp"

using namespace bucketed_topk;

namespace {

std::string header() {
  std::string h;
  for (const auto c : kCsvColumns) {
    if (!h.empty()) h += ',';
    h += c;
  }
  return h;
}

}  // namespace

TEST_CASE("format_real is shortest round-trip", "[csv]") {
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(2048.0) == "2048");
  CHECK(format_real(1.0 / 3.0) == "0.3333333333333333");
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double v = u(gen) * std::pow(10.0, static_cast<double>(i % 40) - 20.0);
    REQUIRE(std::stod(format_real(v)) == v);
  }
}

TEST_CASE("document round-trips byte for byte", "[csv]") {
  CsvDocument doc;
  doc.metadata = {"command=recall seed=3"};
  CsvRow full;
  full.model = "serial";
  full.n = 2048;
  full.k = 256;
  full.m = 1;
  full.b = 256;
  full.k_b = 1;
  full.ratio = 1.0;
  full.assignment = "interleaved";
  full.mode = "per-bucket";
  full.analytic_error = 0.36715975489153631;
  full.mc_error = 0.34275390625;
  full.mc_stderr = 0.0013038153753096955;
  full.cost = 2097152.0;
  full.relative_cost = 0.023809523809523808;
  full.mean_ns = 12345.678;
  full.stderr_ns = 9.5;
  full.bytes_moved = 4096;
  full.gbytes_per_s = 0.33;
  full.flags = "z=1.5;z_exceeds_3=0";
  CsvRow sparse;
  sparse.n = 16;
  sparse.ratio = 0.5;
  doc.rows = {full, sparse};

  const auto text = to_csv(doc);
  CHECK(text.rfind("# command=recall seed=3\n" + header() + "\n", 0) == 0);
  const auto parsed = parse_csv(text);
  CHECK(parsed.metadata == doc.metadata);
  CHECK(parsed.rows == doc.rows);
  CHECK(to_csv(parsed) == text);
}

TEST_CASE("parse rejects malformed input", "[csv]") {
  CHECK_THROWS_AS(parse_csv("a,b,c\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header() + "\nserial,1,2\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header() + "\nserial,x,,,,,,,,,,,,,,,,,\n"), std::runtime_error);
  CHECK_NOTHROW(parse_csv(header() + "\n"));
}
