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

#include "fpcsat/cardinality.h"

#include <algorithm>
#include <limits>

namespace fpcsat {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

IndicatorVectors ones_covering(const Formula& f, Var i) {
  return IndicatorVectors::all_ones(std::max(f.max_var(), i));
}

Formula effective_part(const Formula& f) {
  std::vector<Clause> kept;
  for (const auto& c : f) {
    if (!is_tautology(c)) kept.push_back(c);
  }
  return Formula(std::move(kept));
}

}  // namespace

IndicatorVectors IndicatorVectors::all_ones(Var max_var) {
  IndicatorVectors v;
  v.x.assign(static_cast<std::size_t>(max_var) + 1, 1);
  v.xc.assign(static_cast<std::size_t>(max_var) + 1, 1);
  return v;
}

std::int64_t eval_f(const Formula& f, const IndicatorVectors& v) {
  std::int64_t sum = 0;
  for (const auto& c : f) {
    std::int64_t product = 1;
    for (Literal l : c) {
      if (!v.covers(l.var())) {
        throw UnassignedVariableError("indicator vectors do not cover x" + std::to_string(l.var()));
      }
      const std::int64_t ind = l.is_negative() ? v.xc[l.var()] : v.x[l.var()];
      if (ind != 0 && ind != 1) throw Error("indicator values must be 0 or 1");
      product *= ind;
    }
    sum += product;
  }
  return sum;
}

std::int64_t total_clauses(const Formula& f) {
  return eval_f(f, IndicatorVectors::all_ones(f.max_var()));
}

std::int64_t count_pos(const Formula& f, Var i) {
  auto v = ones_covering(f, i);
  const std::int64_t total = eval_f(f, v);
  v.x[i] = 0;
  return total - eval_f(f, v);
}

std::int64_t count_neg(const Formula& f, Var i) {
  auto v = ones_covering(f, i);
  const std::int64_t total = eval_f(f, v);
  v.xc[i] = 0;
  return total - eval_f(f, v);
}

std::int64_t count_either(const Formula& f, Var i) {
  auto v = ones_covering(f, i);
  const std::int64_t total = eval_f(f, v);
  v.x[i] = 0;
  v.xc[i] = 0;
  return total - eval_f(f, v);
}

std::int64_t count_pos_scan(const Formula& f, Var i) {
  return std::count_if(f.begin(), f.end(), [&](const Clause& c) { return c.contains(Literal::positive(i)); });
}

std::int64_t count_neg_scan(const Formula& f, Var i) {
  return std::count_if(f.begin(), f.end(), [&](const Clause& c) { return c.contains(Literal::negative(i)); });
}

std::int64_t count_either_scan(const Formula& f, Var i) {
  return std::count_if(f.begin(), f.end(), [&](const Clause& c) { return c.mentions(i); });
}

bool check_tautology_clauses(const Formula& f) {
  for (Var i : variables_of(f)) {
    if (count_pos(f, i) + count_neg(f, i) > count_either(f, i)) return true;
  }
  return false;
}

CardinalityProfile profile(const Formula& f) {
  CardinalityProfile p;
  p.total = total_clauses(f);
  p.n_effective = static_cast<std::int64_t>(
      std::count_if(f.begin(), f.end(), [](const Clause& c) { return !is_tautology(c); }));
  const auto vars = variables_of(f);
  p.n = vars.size();
  p.per_variable.reserve(vars.size());
  for (Var i : vars) {
    p.per_variable.push_back({i, count_pos(f, i), count_neg(f, i), count_either(f, i)});
  }
  return p;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (base != 0 && out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

std::uint64_t effective_total_bound(std::size_t n) {
  const auto three = saturating_pow(3, n);
  if (three == kSaturated) return kSaturated;
  return three - saturating_pow(2, n);
}

std::uint64_t per_variable_bound(std::size_t n) {
  return n == 0 ? 0 : effective_total_bound(n - 1);
}

std::uint64_t general_total_bound(std::size_t n) {
  const auto four = saturating_pow(4, n);
  if (four == kSaturated) return kSaturated;
  return four - saturating_pow(2, n);
}

PreprocessReport preprocess(const Formula& f) {
  PreprocessReport r;
  const auto vars = variables_of(f);
  r.n = vars.size();
  r.clause_count = f.size();
  r.has_tautologies = check_tautology_clauses(f);

  const auto size = static_cast<std::uint64_t>(f.size());
  r.unsat_by_general_bound = size > general_total_bound(r.n);
  if (!r.has_tautologies) r.unsat_by_effective_bound = size > effective_total_bound(r.n);

  const Formula eff = r.has_tautologies ? effective_part(f) : f;
  r.effective_clause_count = eff.size();
  const std::uint64_t bound = per_variable_bound(r.n);
  for (Var i : vars) {
    const auto pos = static_cast<std::uint64_t>(count_pos(eff, i));
    const auto neg = static_cast<std::uint64_t>(count_neg(eff, i));
    if (std::min(pos, neg) > bound) {
      r.unsat_by_variable_bound.push_back(i);
    } else if (pos <= bound && bound < neg) {
      r.forced_literals.push_back({i, false});
    } else if (neg <= bound && bound < pos) {
      r.forced_literals.push_back({i, true});
    }
  }
  return r;
}

std::string format_profile(const CardinalityProfile& p) {
  std::string out;
  out += "vars=" + std::to_string(p.n) + "\n";
  out += "total=" + std::to_string(p.total) + "\n";
  out += "effective=" + std::to_string(p.n_effective) + "\n";
  for (const auto& v : p.per_variable) {
    const std::string key = "var." + std::to_string(v.var) + ".";
    out += key + "n_pos=" + std::to_string(v.n_pos) + "\n";
    out += key + "n_neg=" + std::to_string(v.n_neg) + "\n";
    out += key + "n_either=" + std::to_string(v.n_either) + "\n";
  }
  return out;
}

std::string profile_csv(const CardinalityProfile& p) {
  std::string out = "metric,var,value\n";
  out += "vars,," + std::to_string(p.n) + "\n";
  out += "total,," + std::to_string(p.total) + "\n";
  out += "effective,," + std::to_string(p.n_effective) + "\n";
  for (const auto& v : p.per_variable) {
    const std::string var = std::to_string(v.var);
    out += "n_pos," + var + "," + std::to_string(v.n_pos) + "\n";
    out += "n_neg," + var + "," + std::to_string(v.n_neg) + "\n";
    out += "n_either," + var + "," + std::to_string(v.n_either) + "\n";
  }
  return out;
}

namespace {

std::string join_vars(const std::vector<Var>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vars[i]);
  }
  return out;
}

}  // namespace

std::string format_preprocess(const PreprocessReport& r) {
  std::string out;
  out += "n=" + std::to_string(r.n) + "\n";
  out += "clauses=" + std::to_string(r.clause_count) + "\n";
  out += "effective_clauses=" + std::to_string(r.effective_clause_count) + "\n";
  out += "has_tautologies=" + std::to_string(int{r.has_tautologies}) + "\n";
  out += "effective_total_bound=" + std::to_string(effective_total_bound(r.n)) + "\n";
  out += "general_total_bound=" + std::to_string(general_total_bound(r.n)) + "\n";
  out += "per_variable_bound=" + std::to_string(per_variable_bound(r.n)) + "\n";
  out += "unsat_by_total_bound=" + std::to_string(int{r.unsat_by_total_bound()}) + "\n";
  out += "unsat_by_effective_bound=" + std::to_string(int{r.unsat_by_effective_bound}) + "\n";
  out += "unsat_by_general_bound=" + std::to_string(int{r.unsat_by_general_bound}) + "\n";
  out += "unsat_by_variable_bound=" + join_vars(r.unsat_by_variable_bound) + "\n";
  for (const auto& fl : r.forced_literals) {
    out += "forced.x" + std::to_string(fl.var) + "=" + (fl.value ? "1" : "0") + "\n";
  }
  out += std::string("verdict=") + (r.unsat() ? "UNSAT" : "UNKNOWN") + "\n";
  return out;
}

std::string preprocess_csv(const PreprocessReport& r) {
  std::string out = "metric,var,value\n";
  out += "n,," + std::to_string(r.n) + "\n";
  out += "clauses,," + std::to_string(r.clause_count) + "\n";
  out += "effective_clauses,," + std::to_string(r.effective_clause_count) + "\n";
  out += "has_tautologies,," + std::to_string(int{r.has_tautologies}) + "\n";
  out += "unsat_by_effective_bound,," + std::to_string(int{r.unsat_by_effective_bound}) + "\n";
  out += "unsat_by_general_bound,," + std::to_string(int{r.unsat_by_general_bound}) + "\n";
  for (Var v : r.unsat_by_variable_bound) out += "unsat_by_variable_bound," + std::to_string(v) + ",1\n";
  for (const auto& fl : r.forced_literals) {
    out += "forced," + std::to_string(fl.var) + "," + (fl.value ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace fpcsat
