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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fpcsat/cnf.h"

namespace fpcsat {

/// 0/1 indicator per positive literal (x) and per negative literal (xc),
/// indexed by variable. Index 0 is unused.
struct IndicatorVectors {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> xc;

  static IndicatorVectors all_ones(Var max_var);
  bool covers(Var v) const { return v < x.size() && v < xc.size(); }
};

/// Sum over clauses of the product of the indicators of their literals;
/// the empty clause contributes 1. Throws UnassignedVariableError when a
/// variable of `f` is not covered.
std::int64_t eval_f(const Formula& f, const IndicatorVectors& v);

/// Clause count via the cardinality function at all-ones.
std::int64_t total_clauses(const Formula& f);

// Occurrence counts through the cardinality function: total minus the
// value with the relevant indicator(s) zeroed.
std::int64_t count_pos(const Formula& f, Var i);
std::int64_t count_neg(const Formula& f, Var i);
std::int64_t count_either(const Formula& f, Var i);

// The same counts by scanning clauses.
std::int64_t count_pos_scan(const Formula& f, Var i);
std::int64_t count_neg_scan(const Formula& f, Var i);
std::int64_t count_either_scan(const Formula& f, Var i);

/// True iff some variable satisfies count_pos + count_neg > count_either.
bool check_tautology_clauses(const Formula& f);

struct VariableCounts {
  Var var = 0;
  std::int64_t n_pos = 0;
  std::int64_t n_neg = 0;
  std::int64_t n_either = 0;
};

struct CardinalityProfile {
  std::int64_t total = 0;
  std::int64_t n_effective = 0;
  std::size_t n = 0;
  std::vector<VariableCounts> per_variable;
};

CardinalityProfile profile(const Formula& f);

/// base^exp saturated to UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
/// 3^n - 2^n, the size of a complete formula minus one power set.
std::uint64_t effective_total_bound(std::size_t n);
/// 3^(n-1) - 2^(n-1); 0 for n = 0.
std::uint64_t per_variable_bound(std::size_t n);
/// 4^n - 2^n, for formulas that may hold tautologies.
std::uint64_t general_total_bound(std::size_t n);

struct ForcedLiteral {
  Var var = 0;
  bool value = false;
  friend bool operator==(const ForcedLiteral&, const ForcedLiteral&) = default;
};

struct PreprocessReport {
  std::size_t n = 0;
  std::size_t clause_count = 0;
  std::size_t effective_clause_count = 0;
  bool has_tautologies = false;
  /// |F| > 3^n - 2^n; only evaluated for tautology-free formulas.
  bool unsat_by_effective_bound = false;
  /// |F| > 4^n - 2^n.
  bool unsat_by_general_bound = false;
  /// Variables with min(n(x), n(~x)) above 3^(n-1) - 2^(n-1).
  std::vector<Var> unsat_by_variable_bound;
  std::vector<ForcedLiteral> forced_literals;

  bool unsat_by_total_bound() const { return unsat_by_effective_bound || unsat_by_general_bound; }
  bool unsat() const { return unsat_by_total_bound() || !unsat_by_variable_bound.empty(); }
};

/// Cardinality bounds on a formula with set semantics. Per-variable counts
/// are taken over the non-tautology clauses; n is |variables_of(f)|.
PreprocessReport preprocess(const Formula& f);

/// "key=value" lines.
std::string format_profile(const CardinalityProfile& p);
std::string format_preprocess(const PreprocessReport& r);
/// Long-format CSV: "metric,var,value".
std::string profile_csv(const CardinalityProfile& p);
std::string preprocess_csv(const PreprocessReport& r);

}  // namespace fpcsat
