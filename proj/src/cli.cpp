/**
 * Copyright (c) 2026 The bucketed-topk Authors
 * Licensed under the Apache License, Version 2.0
 */

#include "bucketed_topk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bucketed_topk/approx.hpp"
#include "bucketed_topk/bench.hpp"
#include "bucketed_topk/cost.hpp"
#include "bucketed_topk/csv.hpp"
#include "bucketed_topk/exact.hpp"
#include "bucketed_topk/parallel.hpp"
#include "bucketed_topk/recall.hpp"
#include "bucketed_topk/simdata.hpp"

namespace bucketed_topk::cli {
namespace {

/// Bad flags or values: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

/// k given as an integer or as "n/<d>".
std::size_t resolve_k(const std::string& token, std::size_t n) {
  if (token.rfind("n/", 0) == 0) {
    const auto divisor = parse_number<std::size_t>(std::string_view(token).substr(2), "k");
    if (divisor == 0 || n % divisor != 0) throw UsageError("k '" + token + "' is not integral");
    return n / divisor;
  }
  return parse_number<std::size_t>(token, "k");
}

ScoreMatrix read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file " + path);
  std::vector<float> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::size_t count = 0;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      values.push_back(parse_number<float>(trim(cell), "score"));
      ++count;
    }
    if (rows > 0 && count != cols) {
      throw UsageError("input rows have different lengths (" + std::to_string(cols) + " vs " +
                       std::to_string(count) + ")");
    }
    cols = count;
    ++rows;
  }
  if (rows == 0) throw UsageError("input file has no rows");
  return ScoreMatrix(rows, cols, std::move(values));
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& out) {
  if (path.empty() || path == "-") return out;
  file.open(path);
  if (!file) throw UsageError("cannot open output file " + path);
  return file;
}

Assignment require_assignment(const std::string& text) {
  if (auto a = parse_assignment(text)) return *a;
  throw UsageError("unknown assignment '" + text + "' (interleaved|contiguous)");
}

// ---------------------------------------------------------------- run

struct RunArgs {
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t k = 0;
  std::size_t b = 0;
  std::size_t kb = 0;
  std::string assignment = "interleaved";
  std::string mode = "auto";
  std::size_t chunks = kDefaultChunksPerBucket;
  std::uint64_t seed = 0;
  std::string input;
  bool exact = false;
};

void cmd_run(const RunArgs& a, std::ostream& out) {
  ScoreMatrix scores;
  if (!a.input.empty()) {
    scores = read_input_file(a.input);
    if (a.n != 0 && a.n != scores.cols()) {
      throw UsageError("--n " + std::to_string(a.n) + " does not match input row length " +
                       std::to_string(scores.cols()));
    }
  } else {
    if (a.n == 0) throw UsageError("--n is required without --input");
    scores = iid_normal(a.m, a.n, a.seed);
  }
  const ProblemShape shape{scores.rows(), scores.cols(), a.k};

  nlohmann::ordered_json doc;
  doc["command"] = "run";
  doc["seed"] = a.seed;
  doc["exact"] = a.exact;
  doc["m"] = shape.m;
  doc["n"] = shape.n;
  doc["k"] = shape.k;

  TopKResult result;
  if (a.exact) {
    result = exact_topk_oracle(scores, a.k);
  } else {
    const BucketScheme scheme{a.b, a.kb, require_assignment(a.assignment)};
    require_valid(shape, scheme);
    ExecutionMode mode;
    if (a.mode == "auto") {
      mode = select_mode(shape, scheme, default_workers());
    } else if (a.mode == "per-bucket") {
      mode = ExecutionMode::per_bucket();
    } else if (a.mode == "chunked") {
      mode = ExecutionMode::chunked_merge(a.chunks);
    } else {
      throw UsageError("unknown mode '" + a.mode + "' (auto|per-bucket|chunked)");
    }
    result = approx_topk(scores, a.k, scheme, mode);
    doc["b"] = scheme.b;
    doc["kb"] = scheme.k_b;
    doc["assignment"] = to_string(scheme.assignment);
    doc["mode"] = to_string(mode);
  }
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < result.rows(); ++r) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    nlohmann::ordered_json indices = nlohmann::ordered_json::array();
    for (const auto& e : result.row(r)) {
      values.push_back(static_cast<double>(e.value));
      indices.push_back(e.index);
    }
    rows.push_back({{"values", std::move(values)}, {"indices", std::move(indices)}});
  }
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------- tradeoff

struct TradeoffArgs {
  std::vector<std::string> models{"serial"};
  std::vector<std::size_t> ns{std::size_t{1} << 20};
  std::vector<std::string> ks{"256"};
  std::vector<std::size_t> ms{1};
  std::vector<std::size_t> kbs{1, 2, 4, 8};
  std::vector<double> ratios{1, 2, 4, 8};
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_tradeoff(const TradeoffArgs& a, std::ostream& out, std::ostream& err) {
  CsvDocument doc;
  doc.metadata.push_back("command=tradeoff seed=" + std::to_string(a.seed));
  for (const auto& model_name : a.models) {
    const auto model = parse_cost_model(model_name);
    if (!model) throw UsageError("unknown model '" + model_name + "' (basic|serial|parallel)");
    for (const std::size_t n : a.ns) {
      for (const auto& k_token : a.ks) {
        const std::size_t k = resolve_k(k_token, n);
        for (const std::size_t m : a.ms) {
          const auto curve = tradeoff_curve(*model, n, k, a.kbs, a.ratios, m);
          for (const auto& s : curve.skipped) {
            err << "skipped model=" << model_name << " n=" << n << " k=" << k << " m=" << m
                << " kb=" << s.k_b << " ratio=" << format_real(s.ratio) << ": " << s.reason
                << '\n';
          }
          for (const auto& p : curve.points) {
            CsvRow row;
            row.model = model_name;
            row.n = n;
            row.k = k;
            row.m = m;
            row.b = p.b;
            row.k_b = p.k_b;
            row.ratio = p.ratio;
            row.assignment = "interleaved";
            row.analytic_error = p.expected_error;
            row.cost = p.cost;
            row.relative_cost = p.relative_cost;
            row.flags = std::string("stage2=") + (stage2_required(n, k, p.b, p.k_b) ? "1" : "0");
            doc.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  if (doc.rows.empty()) throw UsageError("tradeoff grid has no valid point");
  std::ofstream file;
  write_csv(open_output(a.output, file, out), doc);
  return kExitOk;
}

// ---------------------------------------------------------------- recall

struct RecallArgs {
  std::vector<std::size_t> ns{2048};
  std::vector<std::string> ks{"256"};
  std::vector<std::size_t> kbs{1};
  std::vector<std::size_t> bs;
  std::vector<double> ratios{1};
  std::vector<std::string> assignments{"interleaved"};
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  std::string output;
};

std::string z_flags(double analytic, const MonteCarloRecall& mc) {
  const double diff = (1.0 - mc.mean) - analytic;
  double z = 0.0;
  if (mc.standard_error > 0.0) {
    z = diff / mc.standard_error;
  } else if (diff != 0.0) {
    z = std::copysign(HUGE_VAL, diff);
  }
  return "z=" + format_real(z) + ";z_exceeds_3=" + (std::abs(z) > 3.0 ? "1" : "0");
}

int cmd_recall(const RecallArgs& a, std::ostream& out, std::ostream& err) {
  if (a.trials < 100) throw UsageError("--trials must be >= 100");
  CsvDocument doc;
  doc.metadata.push_back("command=recall seed=" + std::to_string(a.seed) +
                         " trials=" + std::to_string(a.trials));
  for (const std::size_t n : a.ns) {
    for (const auto& k_token : a.ks) {
      const std::size_t k = resolve_k(k_token, n);
      for (const std::size_t kb : a.kbs) {
        std::vector<std::size_t> buckets = a.bs;
        if (buckets.empty()) {
          for (const double r : a.ratios) {
            const double b_real = r * static_cast<double>(k) / static_cast<double>(kb);
            if (b_real >= 1.0 && std::floor(b_real) == b_real) {
              buckets.push_back(static_cast<std::size_t>(b_real));
            } else {
              err << "skipped n=" << n << " k=" << k << " kb=" << kb
                  << " ratio=" << format_real(r) << ": b is not a positive integer\n";
            }
          }
        }
        for (const std::size_t b : buckets) {
          for (const auto& assignment_name : a.assignments) {
            const BucketScheme scheme{b, kb, require_assignment(assignment_name)};
            const ProblemShape shape{1, n, k};
            if (auto problem = validate(shape, scheme)) {
              err << "skipped n=" << n << " k=" << k << " b=" << b << " kb=" << kb << ": "
                  << describe(*problem) << '\n';
              continue;
            }
            const double analytic = expected_recall_error(k, b, kb).expected_error;
            const auto mc = monte_carlo_recall(shape, scheme, a.trials, a.seed);
            CsvRow row;
            row.n = n;
            row.k = k;
            row.m = 1;
            row.b = b;
            row.k_b = kb;
            row.ratio = static_cast<double>(b * kb) / static_cast<double>(k);
            row.assignment = assignment_name;
            row.mode = "per-bucket";
            row.analytic_error = analytic;
            row.mc_error = 1.0 - mc.mean;
            row.mc_stderr = mc.standard_error;
            row.flags = z_flags(analytic, mc);
            doc.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  if (doc.rows.empty()) throw UsageError("recall grid has no valid point");
  std::ofstream file;
  write_csv(open_output(a.output, file, out), doc);
  return kExitOk;
}

// ---------------------------------------------------------------- correlation

struct CorrelationArgs {
  std::size_t n = 2048;
  std::size_t k = 256;
  std::vector<double> rhos{0.0, 0.5, 0.9, 0.99};
  std::vector<std::size_t> kbs{1, 2, 4};
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  bool shuffle = false;
  std::string output;
};

/// Offset separating the shuffle streams from the sequence streams.
constexpr std::uint64_t kShuffleStreamBase = std::uint64_t{1} << 40;

int cmd_correlation(const CorrelationArgs& a, std::ostream& out) {
  if (a.trials == 0) throw UsageError("--trials must be >= 1");
  CsvDocument doc;
  doc.metadata.push_back("command=correlation seed=" + std::to_string(a.seed) +
                         " trials=" + std::to_string(a.trials));
  for (const double rho : a.rhos) {
    if (!(rho >= 0.0 && rho < 1.0)) throw UsageError("rho must lie in [0, 1)");
    for (const std::size_t kb : a.kbs) {
      if (kb == 0 || a.k % kb != 0) {
        throw UsageError("kb " + std::to_string(kb) + " must divide k");
      }
      const std::size_t b = a.k / kb;
      std::vector<std::pair<Assignment, bool>> variants{{Assignment::Interleaved, false},
                                                        {Assignment::Contiguous, false}};
      if (a.shuffle) {
        variants.emplace_back(Assignment::Interleaved, true);
        variants.emplace_back(Assignment::Contiguous, true);
      }
      for (const auto& [assignment, shuffled] : variants) {
        const BucketScheme scheme{b, kb, assignment};
        require_valid(ProblemShape{1, a.n, a.k}, scheme);
        const std::uint64_t seed = a.seed;
        const std::size_t n = a.n;
        const bool permute_rows = shuffled;
        const RowSource source = [=](std::size_t trial, std::span<float> row) {
          auto seq = ar1_sequence(n, rho, seed, trial);
          if (permute_rows) seq = permute(seq, seed, kShuffleStreamBase + trial);
          std::copy(seq.begin(), seq.end(), row.begin());
        };
        const auto mc = measure_recall(a.n, a.k, scheme, a.trials, source);
        CsvRow row;
        row.n = a.n;
        row.k = a.k;
        row.m = 1;
        row.b = b;
        row.k_b = kb;
        row.ratio = 1.0;
        row.assignment = std::string(to_string(assignment));
        row.mode = "per-bucket";
        row.analytic_error = expected_recall_error(a.k, b, kb).expected_error;
        row.mc_error = 1.0 - mc.mean;
        row.mc_stderr = mc.standard_error;
        row.flags = "rho=" + format_real(rho) + ";shuffled=" + (shuffled ? "1" : "0");
        doc.rows.push_back(std::move(row));
      }
    }
  }
  std::ofstream file;
  write_csv(open_output(a.output, file, out), doc);
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> ns{std::size_t{1} << 20};
  std::vector<std::string> ks{"n/8"};
  std::size_t m = 8;
  std::vector<std::size_t> kbs{2};
  std::vector<double> ratios{1};
  std::vector<std::string> ops{"priority-queue", "approx-per-bucket"};
  std::string model = "serial";
  std::string assignment = "interleaved";
  std::size_t chunks = kDefaultChunksPerBucket;
  std::size_t warmup = 16;
  std::size_t iters = 512;
  std::size_t value_bytes = 4;
  std::size_t index_bytes = 4;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto model = parse_cost_model(a.model);
  if (!model) throw UsageError("unknown model '" + a.model + "'");
  std::vector<SelectionOp> ops;
  for (const auto& name : a.ops) {
    const auto op = parse_selection_op(name);
    if (!op) {
      throw UsageError("unknown op '" + name +
                       "' (exact-oracle|priority-queue|approx-per-bucket|approx-chunked)");
    }
    ops.push_back(*op);
  }
  const Assignment assignment = require_assignment(a.assignment);
  if (a.iters == 0) throw UsageError("--iters must be >= 1");

  CsvDocument doc;
  doc.metadata.push_back("command=bench seed=" + std::to_string(a.seed) +
                         " workers=" + std::to_string(default_workers()));
  for (const std::size_t n : a.ns) {
    for (const auto& k_token : a.ks) {
      const std::size_t k = resolve_k(k_token, n);
      const ProblemShape shape{a.m, n, k};
      require_valid(shape);
      for (const SelectionOp op : ops) {
        const bool approx = op == SelectionOp::ApproxPerBucket || op == SelectionOp::ApproxChunked;
        std::vector<BucketScheme> schemes;
        if (approx) {
          for (const std::size_t kb : a.kbs) {
            for (const double r : a.ratios) {
              const double b_real = r * static_cast<double>(k) / static_cast<double>(kb);
              const BucketScheme s{static_cast<std::size_t>(b_real), kb, assignment};
              if (b_real < 1.0 || std::floor(b_real) != b_real || validate(shape, s)) {
                err << "skipped n=" << n << " k=" << k << " kb=" << kb
                    << " ratio=" << format_real(r) << '\n';
                continue;
              }
              schemes.push_back(s);
            }
          }
        } else {
          schemes.push_back({});
        }
        for (const auto& scheme : schemes) {
          BenchConfig config;
          config.op = op;
          config.shape = shape;
          config.scheme = scheme;
          config.chunks_per_bucket = a.chunks;
          config.warmup = a.warmup;
          config.iterations = a.iters;
          config.seed = a.seed;
          const TimingStats stats = time_selection(config);

          CsvRow row;
          row.model = a.model;
          row.n = n;
          row.k = k;
          row.m = a.m;
          row.mode = std::string(to_string(op));
          const double exact = exact_cost(*model, n, k, a.m);
          if (approx) {
            row.b = scheme.b;
            row.k_b = scheme.k_b;
            row.ratio = static_cast<double>(scheme.b * scheme.k_b) / static_cast<double>(k);
            row.assignment = std::string(to_string(assignment));
            if (op == SelectionOp::ApproxChunked) row.mode += "-" + std::to_string(a.chunks);
            row.analytic_error = expected_recall_error(k, scheme.b, scheme.k_b).expected_error;
            row.cost = approx_cost(*model, n, k, a.m, scheme.b, scheme.k_b);
          } else {
            row.cost = exact;
          }
          row.relative_cost = *row.cost / exact;
          row.mean_ns = stats.mean_ns;
          row.stderr_ns = stats.stderr_ns;
          if (stats.mean_ns > 0.0) {
            const auto bw = bandwidth(shape, a.value_bytes, a.index_bytes, stats);
            row.bytes_moved = bw.bytes_moved;
            row.gbytes_per_s = bw.gbytes_per_s;
          }
          row.flags = "warmup=" + std::to_string(stats.warmup) +
                      ";iters=" + std::to_string(stats.iterations) +
                      ";rel_stderr=" + format_real(stats.relative_stderr()) +
                      ";stable=" + (stats.stable() ? "1" : "0");
          doc.rows.push_back(std::move(row));
        }
      }
    }
  }
  if (doc.rows.empty()) throw UsageError("bench grid has no valid point");
  std::ofstream file;
  write_csv(open_output(a.output, file, out), doc);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bucketed approximate top-k: selection, recall and cost-model reports",
               "bucketed-topk"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", "bucketed-topk 1.0.0");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Select the top-k of a batch and print JSON");
  run_cmd->add_option("--n", run_args.n, "Row length (inferred from --input)");
  run_cmd->add_option("--m", run_args.m, "Rows to generate when no --input is given");
  run_cmd->add_option("--k", run_args.k, "Selection size")->required();
  run_cmd->add_option("--b", run_args.b, "Bucket count");
  run_cmd->add_option("--kb", run_args.kb, "Per-bucket selection size");
  run_cmd->add_option("--assignment", run_args.assignment, "interleaved|contiguous");
  run_cmd->add_option("--mode", run_args.mode, "auto|per-bucket|chunked");
  run_cmd->add_option("--chunks", run_args.chunks, "Chunks per bucket in chunked mode");
  run_cmd->add_option("--seed", run_args.seed, "Seed for generated input");
  run_cmd->add_option("--input", run_args.input, "CSV file, one row of scores per line");
  run_cmd->add_flag("--exact", run_args.exact, "Run exact top-k instead");

  TradeoffArgs tradeoff_args;
  auto* tradeoff_cmd =
      app.add_subcommand("tradeoff", "Cost vs expected recall error over a (kb, ratio) grid");
  tradeoff_cmd->add_option("--model", tradeoff_args.models, "basic|serial|parallel")
      ->delimiter(',');
  tradeoff_cmd->add_option("--n", tradeoff_args.ns)->delimiter(',');
  tradeoff_cmd->add_option("--k", tradeoff_args.ks, "Integers or n/<d>")->delimiter(',');
  tradeoff_cmd->add_option("--m", tradeoff_args.ms)->delimiter(',');
  tradeoff_cmd->add_option("--kb", tradeoff_args.kbs)->delimiter(',');
  tradeoff_cmd->add_option("--ratio", tradeoff_args.ratios, "Values of b*kb/k")->delimiter(',');
  tradeoff_cmd->add_option("--seed", tradeoff_args.seed);
  tradeoff_cmd->add_option("--output", tradeoff_args.output, "CSV path (default stdout)");

  RecallArgs recall_args;
  auto* recall_cmd =
      app.add_subcommand("recall", "Analytic vs Monte Carlo recall error on i.i.d. normal rows");
  recall_cmd->add_option("--n", recall_args.ns)->delimiter(',');
  recall_cmd->add_option("--k", recall_args.ks, "Integers or n/<d>")->delimiter(',');
  recall_cmd->add_option("--kb", recall_args.kbs)->delimiter(',');
  recall_cmd->add_option("--b", recall_args.bs, "Bucket counts (overrides --ratio)")
      ->delimiter(',');
  recall_cmd->add_option("--ratio", recall_args.ratios)->delimiter(',');
  recall_cmd->add_option("--assignment", recall_args.assignments)->delimiter(',');
  recall_cmd->add_option("--trials", recall_args.trials);
  recall_cmd->add_option("--seed", recall_args.seed);
  recall_cmd->add_option("--output", recall_args.output);

  CorrelationArgs corr_args;
  auto* corr_cmd = app.add_subcommand(
      "correlation", "Recall of interleaved vs contiguous buckets on AR(1) sequences");
  corr_cmd->add_option("--n", corr_args.n);
  corr_cmd->add_option("--k", corr_args.k);
  corr_cmd->add_option("--rho-list", corr_args.rhos)->delimiter(',');
  corr_cmd->add_option("--kb-list", corr_args.kbs)->delimiter(',');
  corr_cmd->add_option("--trials", corr_args.trials);
  corr_cmd->add_option("--seed", corr_args.seed);
  corr_cmd->add_flag("--shuffle", corr_args.shuffle, "Also report randomly permuted inputs");
  corr_cmd->add_option("--output", corr_args.output);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time selection routines on i.i.d. normal input");
  bench_cmd->add_option("--n", bench_args.ns)->delimiter(',');
  bench_cmd->add_option("--k", bench_args.ks, "Integers or n/<d>")->delimiter(',');
  bench_cmd->add_option("--m", bench_args.m);
  bench_cmd->add_option("--kb", bench_args.kbs)->delimiter(',');
  bench_cmd->add_option("--ratio", bench_args.ratios)->delimiter(',');
  bench_cmd->add_option("--ops", bench_args.ops)->delimiter(',');
  bench_cmd->add_option("--model", bench_args.model, "Cost model for the predicted columns");
  bench_cmd->add_option("--assignment", bench_args.assignment);
  bench_cmd->add_option("--chunks", bench_args.chunks);
  bench_cmd->add_option("--warmup", bench_args.warmup);
  bench_cmd->add_option("--iters", bench_args.iters);
  bench_cmd->add_option("--value-bytes", bench_args.value_bytes);
  bench_cmd->add_option("--index-bytes", bench_args.index_bytes);
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--output", bench_args.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*run_cmd) {
      cmd_run(run_args, out);
      return kExitOk;
    }
    if (*tradeoff_cmd) return cmd_tradeoff(tradeoff_args, out, err);
    if (*recall_cmd) return cmd_recall(recall_args, out, err);
    if (*corr_cmd) return cmd_correlation(corr_args, out);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TopkError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace bucketed_topk::cli
