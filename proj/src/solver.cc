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

#include "fpcsat/solver.h"

#include <algorithm>
#include <limits>

#include "fpcsat/cardinality.h"

namespace fpcsat {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSat:
      return "SAT";
    case Verdict::kUnsat:
      return "UNSAT";
    case Verdict::kResourceExceeded:
      return "RESOURCE_EXCEEDED";
  }
  return "UNKNOWN";
}

Assignment model_from_fpc(const Clause& c) {
  if (is_tautology(c)) throw TautologyError("cannot falsify tautology clause " + to_string(c));
  Assignment a;
  for (Literal l : c) a.set(l.var(), l.is_negative());
  return a;
}

SolveResult check_sat(const Formula& f, const SolveConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  SolveResult result;
  auto finish = [&](Verdict v) -> SolveResult {
    result.verdict = v;
    result.stats.elapsed = Clock::now() - start;
    return std::move(result);
  };

  const auto norm = normalize(f);
  result.stats.duplicates_removed = norm.report.duplicates_removed;
  if (norm.report.has_empty_clause) return finish(Verdict::kUnsat);

  std::vector<const Clause*> work;
  work.reserve(norm.formula.size());
  for (const auto& c : norm.formula) {
    if (is_tautology(c)) {
      ++result.stats.tautologies_skipped;
    } else {
      work.push_back(&c);
    }
  }

  std::vector<Clause> forced_units;
  if (cfg.enable_cardinality_preprocessing) {
    const auto report = preprocess(norm.formula);
    if (report.unsat()) {
      result.stats.decided_by_preprocessing = true;
      return finish(Verdict::kUnsat);
    }
    // x forced true removes every fully populated clause holding x.
    for (const auto& fl : report.forced_literals) {
      forced_units.push_back(Clause{fl.value ? Literal::positive(fl.var) : Literal::negative(fl.var)});
    }
    result.stats.forced_literals = forced_units.size();
    std::vector<const Clause*> with_units;
    with_units.reserve(work.size() + forced_units.size());
    for (const auto& u : forced_units) with_units.push_back(&u);
    with_units.insert(with_units.end(), work.begin(), work.end());
    work = std::move(with_units);
  }

  if (cfg.sort_clauses) {
    std::stable_sort(work.begin(), work.end(),
                     [](const Clause* a, const Clause* b) { return a->size() < b->size(); });
  }

  FpcTree tree(cfg.node_budget);
  const auto deadline = cfg.timeout ? std::optional(start + *cfg.timeout) : std::nullopt;
  for (const Clause* c : work) {
    if (deadline && Clock::now() > *deadline) {
      result.stats.timed_out = true;
      result.stats.peak_nodes = tree.peak_nodes();
      return finish(Verdict::kResourceExceeded);
    }
    for (Literal l : *c) {
      if (tree.is_registered(l.var())) continue;
      const auto status = tree.register_variable(l.var());
      result.stats.peak_nodes = tree.peak_nodes();
      if (status == RegisterStatus::kClosed) return finish(Verdict::kUnsat);
      if (status == RegisterStatus::kBudgetExceeded) return finish(Verdict::kResourceExceeded);
    }
    result.stats.eliminations += tree.eliminate(*c);
    ++result.stats.clauses_processed;
    if (cfg.on_clause) cfg.on_clause(*c, tree);
    if (tree.is_closed()) {
      result.stats.peak_nodes = tree.peak_nodes();
      return finish(Verdict::kUnsat);
    }
  }

  result.stats.peak_nodes = tree.peak_nodes();
  result.absent_fpcs = tree.open_fpcs(cfg.report_all_models ? std::numeric_limits<std::size_t>::max() : 1);
  result.models.reserve(result.absent_fpcs.size());
  for (const auto& c : result.absent_fpcs) result.models.push_back(model_from_fpc(c));
  return finish(result.absent_fpcs.empty() ? Verdict::kUnsat : Verdict::kSat);
}

}  // namespace fpcsat
