/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bucketed_topk {
namespace {

std::string field(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string field(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

template <typename T>
std::optional<T> parse_number(std::string_view text, std::string_view column) {
  if (text.empty()) return std::nullopt;
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("csv: bad value '" + std::string(text) + "' in column " +
                             std::string(column));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string header() {
  std::string out;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i > 0) out += ',';
    out += kCsvColumns[i];
  }
  return out;
}

}  // namespace

std::string format_real(double value) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("csv: cannot format real");
  return std::string(buffer.data(), ptr);
}

void write_csv(std::ostream& out, const CsvDocument& doc) {
  for (const auto& line : doc.metadata) out << "# " << line << '\n';
  out << header() << '\n';
  for (const auto& r : doc.rows) {
    out << r.model << ',' << field(r.n) << ',' << field(r.k) << ',' << field(r.m) << ','
        << field(r.b) << ',' << field(r.k_b) << ',' << field(r.ratio) << ',' << r.assignment
        << ',' << r.mode << ',' << field(r.analytic_error) << ',' << field(r.mc_error) << ','
        << field(r.mc_stderr) << ',' << field(r.cost) << ',' << field(r.relative_cost) << ','
        << field(r.mean_ns) << ',' << field(r.stderr_ns) << ',' << field(r.bytes_moved) << ','
        << field(r.gbytes_per_s) << ',' << r.flags << '\n';
  }
}

std::string to_csv(const CsvDocument& doc) {
  std::ostringstream out;
  write_csv(out, doc);
  return out.str();
}

CsvDocument parse_csv(std::istream& in) {
  CsvDocument doc;
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (!seen_header) {
      if (line.rfind("# ", 0) == 0) {
        doc.metadata.push_back(line.substr(2));
        continue;
      }
      if (line != header()) throw std::runtime_error("csv: unexpected header");
      seen_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != kCsvColumns.size()) {
      throw std::runtime_error("csv: expected " + std::to_string(kCsvColumns.size()) +
                               " fields, got " + std::to_string(f.size()));
    }
    CsvRow r;
    r.model = std::string(f[0]);
    r.n = parse_number<std::size_t>(f[1], kCsvColumns[1]);
    r.k = parse_number<std::size_t>(f[2], kCsvColumns[2]);
    r.m = parse_number<std::size_t>(f[3], kCsvColumns[3]);
    r.b = parse_number<std::size_t>(f[4], kCsvColumns[4]);
    r.k_b = parse_number<std::size_t>(f[5], kCsvColumns[5]);
    r.ratio = parse_number<double>(f[6], kCsvColumns[6]);
    r.assignment = std::string(f[7]);
    r.mode = std::string(f[8]);
    r.analytic_error = parse_number<double>(f[9], kCsvColumns[9]);
    r.mc_error = parse_number<double>(f[10], kCsvColumns[10]);
    r.mc_stderr = parse_number<double>(f[11], kCsvColumns[11]);
    r.cost = parse_number<double>(f[12], kCsvColumns[12]);
    r.relative_cost = parse_number<double>(f[13], kCsvColumns[13]);
    r.mean_ns = parse_number<double>(f[14], kCsvColumns[14]);
    r.stderr_ns = parse_number<double>(f[15], kCsvColumns[15]);
    r.bytes_moved = parse_number<std::size_t>(f[16], kCsvColumns[16]);
    r.gbytes_per_s = parse_number<double>(f[17], kCsvColumns[17]);
    r.flags = std::string(f[18]);
    doc.rows.push_back(std::move(r));
  }
  if (!seen_header) throw std::runtime_error("csv: missing header");
  return doc;
}

CsvDocument parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

}  // namespace bucketed_topk
