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

// Exhaustive ground truth for small formulas. Every routine takes an
// explicit variable limit and throws LimitExceededError past it.

#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "fpcsat/cnf.h"

namespace fpcsat {

inline constexpr std::size_t kDefaultOracleVarLimit = 20;

struct OracleResult {
  bool satisfiable = false;
  /// Number of satisfying total assignments over `vars`.
  std::uint64_t model_count = 0;
  /// Models in ascending assignment-index order (bit p = value of vars[p]),
  /// truncated to the requested maximum.
  std::vector<Assignment> models;
  /// The fully populated clause each listed model falsifies.
  std::vector<Clause> falsified_fpc_per_model;
  VariableSet vars;
};

/// Truth-table evaluation of `f` over variables_of(f).
OracleResult brute_force_sat(const Formula& f, std::size_t limit_vars = kDefaultOracleVarLimit,
                             std::size_t max_models = std::numeric_limits<std::size_t>::max());

/// All 2^|v| fully populated clauses. Clause index bit (|v|-1-p) set means
/// the p-th variable appears negated, so {x1,x2} comes first.
std::vector<Clause> enumerate_fpcs(const VariableSet& v, std::size_t limit_vars = kDefaultOracleVarLimit);

/// Fully populated clauses over variables_of(f) none of whose subsets is a
/// non-tautology clause of f, in enumerate_fpcs order.
std::vector<Clause> condition_check(const Formula& f, std::size_t limit_vars = kDefaultOracleVarLimit);
/// As above over a caller-chosen superset of variables_of(f).
std::vector<Clause> condition_check(const Formula& f, const VariableSet& over,
                                    std::size_t limit_vars = kDefaultOracleVarLimit);

/// The unique fully populated clause over `v` that `a` falsifies.
Clause falsified_fpc(const Assignment& a, const VariableSet& v);

/// Every subset of `c`, including the empty clause and `c` itself.
Formula power_set(const Clause& c, std::size_t limit_size = kDefaultOracleVarLimit);

inline constexpr std::size_t kCompleteFormulaVarLimit = 12;

/// All 3^|v| non-tautology clauses over `v` (null clause included), built by
/// choosing absent / positive / negative for each variable.
Formula complete_formula(const VariableSet& v, std::size_t limit_vars = kCompleteFormulaVarLimit);
/// The same clause set as the union of the power sets of all fully
/// populated clauses over `v`.
Formula complete_formula_from_power_sets(const VariableSet& v, std::size_t limit_vars = kCompleteFormulaVarLimit);

/// complete_formula(v) without the power set of `fpc`.
Formula complete_minus_power_set(const VariableSet& v, const Clause& fpc,
                                 std::size_t limit_vars = kCompleteFormulaVarLimit);

}  // namespace fpcsat
