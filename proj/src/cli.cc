// Copyright 2026-present the fpcsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpcsat/cli.h"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fpcsat/bench.h"
#include "fpcsat/cardinality.h"
#include "fpcsat/dimacs.h"
#include "fpcsat/oracle.h"
#include "fpcsat/solver.h"

namespace fpcsat::cli {
namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

DimacsDocument load(const std::string& path, std::istream& in, std::ostream& err) {
  auto doc = parse_dimacs(read_input(path, in));
  const auto& w = doc.warnings;
  if (w.duplicate_literals) err << "c warning: " << w.duplicate_literals << " duplicate literal(s) collapsed\n";
  if (w.undeclared_variables) err << "c warning: " << w.undeclared_variables << " literal(s) above the declared variable count\n";
  if (w.clause_count_mismatch) {
    err << "c warning: header declares " << doc.declared_clauses << " clauses, found " << doc.clauses.size() << "\n";
  }
  return doc;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kSat:
      return kExitSat;
    case Verdict::kUnsat:
      return kExitUnsat;
    case Verdict::kResourceExceeded:
      return kExitResourceExceeded;
  }
  return kExitError;
}

std::string prefixed(const std::string& text, std::string_view prefix) {
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) out += std::string(prefix) + line + "\n";
  return out;
}

SolveResult oracle_as_result(const OracleResult& o) {
  SolveResult r;
  r.verdict = o.satisfiable ? Verdict::kSat : Verdict::kUnsat;
  r.models = o.models;
  r.absent_fpcs = o.falsified_fpc_per_model;
  return r;
}

// Completes a model with false for variables it leaves open.
Assignment extend(const Assignment& m, const VariableSet& vars) {
  Assignment a = m;
  for (Var v : vars) {
    if (!a.is_assigned(v)) a.set(v, false);
  }
  return a;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto parse_one = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error("bad --n-range '" + text + "', expected A..B");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_one(text);
    return {v, v};
  }
  return {parse_one(std::string_view(text).substr(0, dots)), parse_one(std::string_view(text).substr(dots + 2))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide CNF satisfiability by fully populated clause elimination"};
  app.name("fpcsat");
  app.require_subcommand(1, 1);

  std::string file;
  std::size_t max_nodes = FpcTree::kDefaultBudget;
  std::size_t limit_vars = kDefaultOracleVarLimit;
  bool all_models = false;
  bool no_sort = false;
  bool use_preprocess = false;
  bool dump_tree = false;
  bool show_stats = false;
  bool as_csv = false;

  auto* solve = app.add_subcommand("solve", "Solve a DIMACS CNF file");
  solve->add_option("FILE", file, "Input file, '-' for stdin")->required();
  solve->add_option("--max-nodes", max_nodes, "Live tree node budget")->check(CLI::PositiveNumber);
  solve->add_flag("--all-models", all_models, "Report one model per absent fully populated clause");
  solve->add_flag("--no-sort", no_sort, "Keep input clause order");
  solve->add_flag("--preprocess", use_preprocess, "Apply cardinality bounds and forced literals first");
  solve->add_flag("--dump-tree", dump_tree, "Print the tree after each clause as comment lines");
  solve->add_flag("--stats", show_stats, "Print solver statistics as comment lines");

  auto* oracle = app.add_subcommand("oracle", "Brute-force truth-table verdict");
  oracle->add_option("FILE", file, "Input file, '-' for stdin")->required();
  oracle->add_option("--limit-vars", limit_vars, "Refuse formulas with more variables");
  oracle->add_flag("--all-models", all_models, "Report every model");

  auto* verify = app.add_subcommand("verify", "Cross-check solve against oracle");
  verify->add_option("FILE", file, "Input file, '-' for stdin")->required();
  verify->add_option("--max-nodes", max_nodes, "Live tree node budget")->check(CLI::PositiveNumber);
  verify->add_option("--limit-vars", limit_vars, "Oracle variable limit");

  auto* stats = app.add_subcommand("stats", "Cardinality profile and clause report");
  stats->add_option("FILE", file, "Input file, '-' for stdin")->required();
  stats->add_flag("--csv", as_csv, "metric,var,value CSV instead of key=value");

  auto* pre = app.add_subcommand("preprocess", "Cardinality bound report");
  pre->add_option("FILE", file, "Input file, '-' for stdin")->required();
  pre->add_flag("--csv", as_csv, "metric,var,value CSV instead of key=value");

  bench::BenchParams bp;
  std::string family = "random3sat";
  std::string range = "8..12";
  std::string csv_path;
  std::size_t timeout_ms = 10000;
  auto* bench_cmd = app.add_subcommand("bench", "Scaling study over an instance family");
  bench_cmd->add_option("--family", family, "random3sat | pigeonhole | complete-minus-one");
  bench_cmd->add_option("--n-range", range, "A..B: variables, or holes k for pigeonhole");
  bench_cmd->add_option("--ratio", bp.ratio, "Clause/variable ratio for random3sat");
  bench_cmd->add_option("--seed", bp.seed, "Base seed");
  bench_cmd->add_option("--seeds", bp.seeds_per_point, "Instances per range point")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--timeout-ms", timeout_ms, "Per-instance timeout");
  bench_cmd->add_option("--max-nodes", bp.node_budget, "Live tree node budget")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--workers", bp.workers, "Concurrent instances")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--omit-timing", bp.omit_timing, "Write elapsed_ms as 0");
  bench_cmd->add_option("--out", csv_path, "CSV output path, '-' for stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) {
      const auto doc = load(file, in, err);
      SolveConfig cfg;
      cfg.node_budget = max_nodes;
      cfg.report_all_models = all_models;
      cfg.sort_clauses = !no_sort;
      cfg.enable_cardinality_preprocessing = use_preprocess;
      if (dump_tree) {
        cfg.on_clause = [&](const Clause& c, const FpcTree& tree) {
          std::ostringstream dump;
          tree.dump(dump);
          out << "c after clause " << to_string(c) << "\n" << prefixed(dump.str(), "c   ");
        };
      }
      const auto res = check_sat(doc.formula(), cfg);
      if (show_stats) {
        const auto& s = res.stats;
        out << "c clauses_processed=" << s.clauses_processed << "\n"
            << "c tautologies_skipped=" << s.tautologies_skipped << "\n"
            << "c duplicates_removed=" << s.duplicates_removed << "\n"
            << "c peak_nodes=" << s.peak_nodes << "\n"
            << "c eliminations=" << s.eliminations << "\n"
            << "c forced_literals=" << s.forced_literals << "\n"
            << "c elapsed_ms=" << std::chrono::duration<double, std::milli>(s.elapsed).count() << "\n";
      }
      out << write_result(res);
      return exit_code(res.verdict);
    }

    if (oracle->parsed()) {
      const auto doc = load(file, in, err);
      const auto o = brute_force_sat(doc.formula(), limit_vars, all_models ? SIZE_MAX : 1);
      const auto res = oracle_as_result(o);
      out << write_result(res);
      return exit_code(res.verdict);
    }

    if (verify->parsed()) {
      const auto doc = load(file, in, err);
      const Formula f = doc.formula();
      SolveConfig cfg;
      cfg.node_budget = max_nodes;
      const auto solved = check_sat(f, cfg);
      const auto o = brute_force_sat(f, limit_vars, 1);
      const Verdict oracle_verdict = o.satisfiable ? Verdict::kSat : Verdict::kUnsat;
      out << "c solver: " << to_string(solved.verdict) << "\n";
      out << "c oracle: " << to_string(oracle_verdict) << "\n";
      bool ok = solved.verdict == oracle_verdict;
      const auto vars = variables_of(f);
      for (const auto& m : solved.models) {
        if (!evaluate_formula(f, extend(m, vars))) {
          out << "c solver model does not satisfy the formula: " << model_line(m);
          ok = false;
        }
      }
      out << (ok ? "c verify: agree\n" : "c verify: MISMATCH\n");
      return ok ? kExitOk : kExitMismatch;
    }

    if (stats->parsed()) {
      const auto doc = load(file, in, err);
      const Formula f = doc.formula();
      const auto norm = normalize(f);
      const auto prof = profile(f);
      if (as_csv) {
        out << profile_csv(prof);
        out << "duplicates_removed,," << norm.report.duplicates_removed << "\n";
        out << "tautologies,," << norm.report.tautology_indices.size() << "\n";
        out << "empty_clause,," << int{norm.report.has_empty_clause} << "\n";
      } else {
        out << format_profile(prof);
        out << "duplicates_removed=" << norm.report.duplicates_removed << "\n";
        out << "tautologies=" << norm.report.tautology_indices.size() << "\n";
        out << "empty_clause=" << int{norm.report.has_empty_clause} << "\n";
      }
      return kExitOk;
    }

    if (pre->parsed()) {
      const auto doc = load(file, in, err);
      const auto report = preprocess(doc.formula());
      out << (as_csv ? preprocess_csv(report) : format_preprocess(report));
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      const auto fam = bench::parse_family(family);
      if (!fam) throw Error("unknown family '" + family + "'");
      bp.family = *fam;
      std::tie(bp.range_lo, bp.range_hi) = parse_range(range);
      bp.timeout = std::chrono::milliseconds(timeout_ms);

      std::ofstream csv_file;
      std::ostream* csv = &out;
      if (csv_path != "-") {
        csv_file.open(csv_path, std::ios::binary | std::ios::trunc);
        if (!csv_file) throw Error("cannot write '" + csv_path + "'");
        csv = &csv_file;
      }
      const auto records = bench::run_family(bp, csv);
      std::ostream& report = csv_path == "-" ? err : out;
      try {
        report << bench::format_growth(bench::fit_growth(records));
      } catch (const bench::InsufficientDataError& e) {
        report << "label=insufficient-data\nc " << e.what() << "\n";
      }
      return kExitOk;
    }
  } catch (const DimacsParseError& e) {
    err << "error: parse error at " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace fpcsat::cli
