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
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "fpcsat/cnf.h"
#include "fpcsat/fpc_tree.h"

namespace fpcsat {

enum class Verdict { kSat, kUnsat, kResourceExceeded };

std::string_view to_string(Verdict v);

struct SolveConfig {
  std::size_t node_budget = FpcTree::kDefaultBudget;
  bool report_all_models = false;
  /// Runs the cardinality bounds first; a fired bound answers UNSAT and
  /// forced literals are added as unit clauses.
  bool enable_cardinality_preprocessing = false;
  /// Process clauses in ascending size (stable for equal sizes).
  bool sort_clauses = true;
  /// Checked between clauses; expiry yields kResourceExceeded.
  std::optional<std::chrono::milliseconds> timeout;
  /// Called after each processed clause with the current tree.
  std::function<void(const Clause&, const FpcTree&)> on_clause;
};

struct SolveStats {
  std::size_t clauses_processed = 0;
  std::size_t tautologies_skipped = 0;
  std::size_t duplicates_removed = 0;
  std::size_t peak_nodes = 0;
  /// Pointers set to NULL across all eliminations.
  std::size_t eliminations = 0;
  std::size_t forced_literals = 0;
  bool decided_by_preprocessing = false;
  bool timed_out = false;
  std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
  Verdict verdict = Verdict::kUnsat;
  std::vector<Assignment> models;
  std::vector<Clause> absent_fpcs;
  SolveStats stats;
};

/// Decides `f` by eliminating every fully populated clause that contains a
/// clause of `f`. Survivors are absent clauses; each one's falsifying
/// assignment is a model.
SolveResult check_sat(const Formula& f, const SolveConfig& cfg = {});

/// The assignment making every literal of `c` false. Throws TautologyError.
Assignment model_from_fpc(const Clause& c);

}  // namespace fpcsat
