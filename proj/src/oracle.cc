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

#include "fpcsat/oracle.h"

#include <algorithm>
#include <bit>

#include "fpcsat/simd/truth_table.h"

namespace fpcsat {
namespace {

void check_limit(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit || n > simd::kMaxTableVars) {
    throw LimitExceededError(std::string(what) + ": " + std::to_string(n) + " variables exceeds the limit of " +
                             std::to_string(std::min(limit, simd::kMaxTableVars)));
  }
}

Clause fpc_at(const VariableSet& v, std::uint64_t index) {
  const std::size_t n = v.size();
  std::vector<Literal> lits;
  lits.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    const bool neg = (index >> (n - 1 - p)) & 1U;
    lits.push_back(neg ? Literal::negative(v.vars()[p]) : Literal::positive(v.vars()[p]));
  }
  return Clause(std::move(lits));
}

constexpr std::size_t kChunkWords = 4096;

}  // namespace

OracleResult brute_force_sat(const Formula& f, std::size_t limit_vars, std::size_t max_models) {
  OracleResult r;
  r.vars = variables_of(f);
  const std::size_t n = r.vars.size();
  check_limit(n, limit_vars, "brute_force_sat");

  const auto cnf = simd::compile(f, r.vars);
  const std::size_t words = simd::table_words(n);
  std::vector<std::uint64_t> chunk;
  for (std::size_t first = 0; first < words; first += kChunkWords) {
    chunk.resize(std::min(kChunkWords, words - first));
    simd::truth_table(cnf, first, chunk);
    r.model_count += simd::count_ones(chunk);
    for (std::size_t k = 0; k < chunk.size() && r.models.size() < max_models; ++k) {
      for (std::uint64_t bits = chunk[k]; bits && r.models.size() < max_models; bits &= bits - 1) {
        const std::uint64_t t = 64 * static_cast<std::uint64_t>(first + k) + static_cast<unsigned>(std::countr_zero(bits));
        Assignment a;
        for (std::size_t p = 0; p < n; ++p) a.set(r.vars.vars()[p], (t >> p) & 1U);
        r.falsified_fpc_per_model.push_back(falsified_fpc(a, r.vars));
        r.models.push_back(std::move(a));
      }
    }
  }
  r.satisfiable = r.model_count > 0;
  return r;
}

std::vector<Clause> enumerate_fpcs(const VariableSet& v, std::size_t limit_vars) {
  check_limit(v.size(), limit_vars, "enumerate_fpcs");
  const std::uint64_t count = std::uint64_t{1} << v.size();
  std::vector<Clause> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(fpc_at(v, i));
  return out;
}

std::vector<Clause> condition_check(const Formula& f, std::size_t limit_vars) {
  return condition_check(f, variables_of(f), limit_vars);
}

std::vector<Clause> condition_check(const Formula& f, const VariableSet& over, std::size_t limit_vars) {
  const std::size_t n = over.size();
  check_limit(n, limit_vars, "condition_check");

  // A clause is a subset of fully populated clause i iff i agrees with the
  // clause's polarity bit on every variable the clause mentions.
  struct Pattern {
    std::uint64_t care = 0;
    std::uint64_t negated = 0;
  };
  std::vector<Pattern> patterns;
  for (const auto& c : f) {
    if (is_tautology(c)) continue;
    Pattern pat;
    for (Literal l : c) {
      const auto it = std::lower_bound(over.begin(), over.end(), l.var());
      if (it == over.end() || *it != l.var()) {
        throw UnassignedVariableError("variable x" + std::to_string(l.var()) + " is outside the variable set");
      }
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - static_cast<std::size_t>(it - over.begin()));
      pat.care |= bit;
      if (l.is_negative()) pat.negated |= bit;
    }
    patterns.push_back(pat);
  }

  std::vector<Clause> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < count; ++i) {
    const bool hit = std::any_of(patterns.begin(), patterns.end(),
                                 [&](const Pattern& p) { return (i & p.care) == p.negated; });
    if (!hit) out.push_back(fpc_at(over, i));
  }
  return out;
}

Clause falsified_fpc(const Assignment& a, const VariableSet& v) {
  std::vector<Literal> lits;
  lits.reserve(v.size());
  for (Var x : v) {
    auto value = a.get(x);
    if (!value) throw UnassignedVariableError("variable x" + std::to_string(x) + " is unassigned");
    lits.push_back(*value ? Literal::negative(x) : Literal::positive(x));
  }
  return Clause(std::move(lits));
}

Formula power_set(const Clause& c, std::size_t limit_size) {
  check_limit(c.size(), limit_size, "power_set");
  const std::uint64_t count = std::uint64_t{1} << c.size();
  std::vector<Clause> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Literal> lits;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if ((mask >> k) & 1U) lits.push_back(c.literals()[k]);
    }
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

Formula complete_formula(const VariableSet& v, std::size_t limit_vars) {
  check_limit(v.size(), limit_vars, "complete_formula");
  const std::size_t n = v.size();
  std::vector<Clause> out;
  std::vector<int> choice(n, 0);  // 0 absent, 1 positive, 2 negative
  while (true) {
    std::vector<Literal> lits;
    for (std::size_t p = 0; p < n; ++p) {
      if (choice[p] == 1) lits.push_back(Literal::positive(v.vars()[p]));
      if (choice[p] == 2) lits.push_back(Literal::negative(v.vars()[p]));
    }
    out.emplace_back(std::move(lits));
    std::size_t p = 0;
    while (p < n && choice[p] == 2) choice[p++] = 0;
    if (p == n) break;
    ++choice[p];
  }
  return Formula(std::move(out));
}

Formula complete_formula_from_power_sets(const VariableSet& v, std::size_t limit_vars) {
  check_limit(v.size(), limit_vars, "complete_formula_from_power_sets");
  std::vector<Clause> out;
  for (const auto& fpc : enumerate_fpcs(v)) {
    for (const auto& c : power_set(fpc)) out.push_back(c);
  }
  return Formula(std::move(out));
}

Formula complete_minus_power_set(const VariableSet& v, const Clause& fpc, std::size_t limit_vars) {
  if (!is_fully_populated(fpc, v)) throw Error(to_string(fpc) + " is not fully populated over the variable set");
  std::vector<Clause> out;
  for (const auto& c : complete_formula(v, limit_vars)) {
    if (!is_subset(c, fpc)) out.push_back(c);
  }
  return Formula(std::move(out));
}

}  // namespace fpcsat
