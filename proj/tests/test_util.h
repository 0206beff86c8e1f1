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

// Generators and a naive per-assignment evaluator shared by the test
// binaries. Nothing here goes through the truth-table kernels or the tree.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fpcsat/cnf.h"

namespace fpcsat::testing {

inline Literal random_literal(std::mt19937_64& rng, std::size_t n) {
  const auto v = static_cast<Var>(std::uniform_int_distribution<std::size_t>(1, n)(rng));
  return std::bernoulli_distribution(0.5)(rng) ? Literal::positive(v) : Literal::negative(v);
}

/// Clause of `width` independently drawn literals (may repeat or clash).
inline Clause random_clause(std::mt19937_64& rng, std::size_t n, std::size_t width) {
  std::vector<Literal> lits;
  for (std::size_t i = 0; i < width; ++i) lits.push_back(random_literal(rng, n));
  return Clause(std::move(lits));
}

/// Non-tautology clause over distinct variables.
inline Clause random_proper_clause(std::mt19937_64& rng, std::size_t n, std::size_t width) {
  std::vector<Var> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<Var>(i + 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<Literal> lits;
  for (std::size_t i = 0; i < std::min(width, n); ++i) {
    lits.push_back(std::bernoulli_distribution(0.5)(rng) ? Literal::positive(vars[i]) : Literal::negative(vars[i]));
  }
  return Clause(std::move(lits));
}

/// Up to `max_clauses` clauses of width 1..min(n,4) over x1..xn.
inline Formula random_formula(std::mt19937_64& rng, std::size_t n, std::size_t max_clauses) {
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(max_clauses, 1))(rng);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t w = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 4))(rng);
    clauses.push_back(random_clause(rng, n, w));
  }
  return Formula(std::move(clauses));
}

/// Assignment giving vars[p] bit p of `index`.
inline Assignment assignment_at(const VariableSet& vars, std::uint64_t index) {
  Assignment a;
  for (std::size_t p = 0; p < vars.size(); ++p) a.set(vars.vars()[p], (index >> p) & 1U);
  return a;
}

/// Every satisfying total assignment over variables_of(f), via
/// evaluate_formula one assignment at a time.
inline std::vector<Assignment> naive_models(const Formula& f) {
  const auto vars = variables_of(f);
  std::vector<Assignment> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << vars.size()); ++t) {
    auto a = assignment_at(vars, t);
    if (evaluate_formula(f, a)) out.push_back(std::move(a));
  }
  return out;
}

inline bool naive_sat(const Formula& f) { return !naive_models(f).empty(); }

/// Total assignment extending `m` with false on the remaining `vars`.
inline Assignment extend_false(const Assignment& m, const VariableSet& vars) {
  Assignment a = m;
  for (Var v : vars) {
    if (!a.is_assigned(v)) a.set(v, false);
  }
  return a;
}

inline Clause C(std::initializer_list<std::int64_t> lits) { return Clause::from_dimacs(lits); }

}  // namespace fpcsat::testing
