/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#pragma once

/** \file csv.hpp
 *  \brief The fixed CSV schema shared by every CLI report.
 *
 *  Columns never change order and are never omitted; fields a command does
 *  not produce are left empty. Lines starting with '#' before the header
 *  carry run metadata (command, seed). Reals are written in shortest
 *  round-trip form, so parsing a report and writing it back reproduces it
 *  byte for byte.
 */

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bucketed_topk {

inline constexpr std::array<std::string_view, 19> kCsvColumns = {
    "model",          "n",         "k",         "m",         "b",
    "k_b",            "ratio",     "assignment", "mode",     "analytic_error",
    "mc_error",       "mc_stderr", "cost",      "relative_cost", "mean_ns",
    "stderr_ns",      "bytes_moved", "gbytes_per_s", "flags"};

struct CsvRow {
  std::string model;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> m;
  std::optional<std::size_t> b;
  std::optional<std::size_t> k_b;
  std::optional<double> ratio;
  std::string assignment;
  std::string mode;
  std::optional<double> analytic_error;
  std::optional<double> mc_error;
  std::optional<double> mc_stderr;
  std::optional<double> cost;
  std::optional<double> relative_cost;
  std::optional<double> mean_ns;
  std::optional<double> stderr_ns;
  std::optional<std::size_t> bytes_moved;
  std::optional<double> gbytes_per_s;
  std::string flags;  // ';'-separated key=value pairs

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

struct CsvDocument {
  std::vector<std::string> metadata;  // without the leading "# "
  std::vector<CsvRow> rows;
};

/// Shortest decimal text that parses back to exactly `value`.
[[nodiscard]] std::string format_real(double value);

void write_csv(std::ostream& out, const CsvDocument& doc);
[[nodiscard]] std::string to_csv(const CsvDocument& doc);

/// Throws std::runtime_error on a wrong header, field count or malformed number.
[[nodiscard]] CsvDocument parse_csv(std::istream& in);
[[nodiscard]] CsvDocument parse_csv(std::string_view text);

}  // namespace bucketed_topk
