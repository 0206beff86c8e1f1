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

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpcsat/cnf.h"
#include "fpcsat/fpc_tree.h"

namespace fpcsat::bench {

enum class Family { kRandom3Sat, kPigeonhole, kCompleteMinusOne };

std::string_view to_string(Family f);
/// "random3sat" | "pigeonhole" | "complete-minus-one"
std::optional<Family> parse_family(std::string_view name);

/// SplitMix64 step; the only randomness source of the generators.
std::uint64_t splitmix64(std::uint64_t& state);

/// Random k-SAT: `clauses` clauses of k distinct variables drawn from 1..n
/// with uniform polarity. Repeated clauses collapse under set semantics.
Formula random_ksat(std::size_t n, std::size_t clauses, std::size_t k, std::uint64_t seed);

/// PHP(pigeons, holes): variable (i * holes + j + 1) puts pigeon i in hole j.
Formula pigeonhole(std::size_t pigeons, std::size_t holes);

/// Complete formula over {1..n} minus the power set of one fully populated
/// clause chosen from `seed`. Always satisfiable.
Formula complete_minus_one(std::size_t n, std::uint64_t seed, Clause* removed = nullptr);

struct BenchParams {
  Family family = Family::kRandom3Sat;
  /// Variable counts, or hole counts k for the pigeonhole family.
  std::size_t range_lo = 8;
  std::size_t range_hi = 12;
  double ratio = 4.3;
  std::uint64_t seed = 1;
  /// Instances per range point; instance r uses seed + r.
  std::size_t seeds_per_point = 1;
  std::chrono::milliseconds timeout{10000};
  std::size_t node_budget = FpcTree::kDefaultBudget;
  std::size_t workers = 1;
  /// Write elapsed_ms as 0 so output depends on inputs only.
  bool omit_timing = false;
};

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t clause_count = 0;
  std::uint64_t seed = 0;
  std::string verdict;
  double elapsed_ms = 0;
  std::size_t peak_nodes = 0;
  std::size_t eliminations = 0;
  bool timed_out = false;
};

inline constexpr std::string_view kCsvHeader =
    "family,n,clause_count,seed,verdict,elapsed_ms,peak_nodes,eliminations,timed_out";

std::string csv_row(const BenchRecord& r);

/// Builds the instance for one (family, range point, seed).
Formula make_instance(const BenchParams& p, std::size_t point, std::uint64_t seed);

/// Runs every instance, writing the header and each row to `csv` (when
/// given) in instance order as soon as the prefix is complete.
std::vector<BenchRecord> run_family(const BenchParams& p, std::ostream* csv = nullptr);

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

struct GrowthPoint {
  std::size_t n = 0;
  double median_peak_nodes = 0;
  double median_elapsed_ms = 0;
};

struct GrowthReport {
  std::vector<GrowthPoint> points;
  /// Slope of log(median peak nodes) against log(n).
  double peak_loglog_slope = 0;
  /// Slope of log(median elapsed) against log(n).
  double elapsed_loglog_slope = 0;
  /// Per-unit-n growth factors of median peak nodes between adjacent points.
  std::vector<double> peak_ratios;
  /// Geometric mean of the later half of peak_ratios.
  double tail_ratio = 0;
  /// Residual sums of squares of log(peak) fitted linearly in n and in log n.
  double exponential_fit_rss = 0;
  double polynomial_fit_rss = 0;
  std::string label;
};

/// Needs at least four distinct n with records that finished (not timed out,
/// not over budget). Throws InsufficientDataError otherwise.
GrowthReport fit_growth(std::span<const BenchRecord> records);

/// "key=value" lines.
std::string format_growth(const GrowthReport& g);

}  // namespace fpcsat::bench
