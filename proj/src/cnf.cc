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

#include "fpcsat/cnf.h"

#include <algorithm>
#include <set>

namespace fpcsat {

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0) throw Error("literal 0 is the clause terminator");
  if (value > static_cast<std::int64_t>(kMaxVar) || value < -static_cast<std::int64_t>(kMaxVar)) {
    throw Error("literal " + std::to_string(value) + " exceeds the supported variable range");
  }
  const auto v = static_cast<Var>(value < 0 ? -value : value);
  return value < 0 ? negative(v) : positive(v);
}

std::string to_string(Literal l) {
  return (l.is_negative() ? "~x" : "x") + std::to_string(l.var());
}

Clause::Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::collect(std::vector<Literal> lits, std::size_t& duplicates) {
  const std::size_t before = lits.size();
  Clause c(std::move(lits));
  duplicates = before - c.size();
  return c;
}

Clause Clause::from_dimacs(std::initializer_list<std::int64_t> lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (auto v : lits) out.push_back(Literal::from_dimacs(v));
  return Clause(std::move(out));
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

std::optional<Literal> Clause::literal_of(Var v) const {
  const bool neg = contains(Literal::negative(v));
  const bool pos = contains(Literal::positive(v));
  if (neg == pos) return std::nullopt;
  return neg ? Literal::negative(v) : Literal::positive(v);
}

bool Clause::mentions(Var v) const {
  return contains(Literal::negative(v)) || contains(Literal::positive(v));
}

std::string to_string(const Clause& c) {
  if (c.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += to_string(c.literals()[i]);
  }
  return out + "}";
}

VariableSet::VariableSet(std::initializer_list<Var> vars) : VariableSet(std::vector<Var>(vars)) {}

VariableSet::VariableSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (!vars_.empty() && vars_.front() == 0) throw Error("variable index 0 is not allowed");
}

VariableSet VariableSet::range(std::size_t n) {
  std::vector<Var> vars(n);
  for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<Var>(i + 1);
  return VariableSet(std::move(vars));
}

bool VariableSet::contains(Var v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

Formula::Formula(std::initializer_list<Clause> clauses) : Formula(std::vector<Clause>(clauses)) {}

Formula::Formula(std::vector<Clause> clauses) : original_count_(clauses.size()) {
  std::set<Clause> seen;
  clauses_.reserve(clauses.size());
  for (auto& c : clauses) {
    if (seen.insert(c).second) clauses_.push_back(std::move(c));
  }
}

bool Formula::contains(const Clause& c) const {
  return std::find(clauses_.begin(), clauses_.end(), c) != clauses_.end();
}

Var Formula::max_var() const {
  Var m = 0;
  for (const auto& c : clauses_) {
    if (!c.empty()) m = std::max(m, c.literals().back().var());
  }
  return m;
}

bool Formula::same_clauses(const Formula& other) const {
  if (size() != other.size()) return false;
  std::vector<Clause> a(clauses_.begin(), clauses_.end());
  std::vector<Clause> b(other.clauses_.begin(), other.clauses_.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void Assignment::set(Var v, bool value) {
  if (v == 0) throw Error("variable index 0 is not allowed");
  if (values_.size() <= v) values_.resize(v + 1, -1);
  values_[v] = value ? 1 : 0;
}

std::optional<bool> Assignment::get(Var v) const {
  if (v >= values_.size() || values_[v] < 0) return std::nullopt;
  return values_[v] == 1;
}

std::optional<bool> Assignment::value_of(Literal l) const {
  auto v = get(l.var());
  if (!v) return std::nullopt;
  return l.is_negative() ? !*v : *v;
}

std::vector<Var> Assignment::assigned_vars() const {
  std::vector<Var> out;
  for (std::size_t v = 1; v < values_.size(); ++v) {
    if (values_[v] >= 0) out.push_back(static_cast<Var>(v));
  }
  return out;
}

std::size_t Assignment::assigned_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](std::int8_t x) { return x >= 0; }));
}

bool Assignment::is_total_over(const VariableSet& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](Var v) { return is_assigned(v); });
}

bool operator==(const Assignment& a, const Assignment& b) {
  const std::size_t n = std::max(a.values_.size(), b.values_.size());
  for (std::size_t v = 1; v < n; ++v) {
    if (a.get(static_cast<Var>(v)) != b.get(static_cast<Var>(v))) return false;
  }
  return true;
}

std::string to_string(const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (Var v : a.assigned_vars()) {
    if (!first) out += ", ";
    first = false;
    out += "x" + std::to_string(v) + "=" + (*a.get(v) ? "1" : "0");
  }
  return out + "}";
}

bool is_tautology(const Clause& c) {
  // Sorted order places ~x directly before x.
  const auto lits = c.literals();
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].var() == lits[i - 1].var()) return true;
  }
  return false;
}

bool evaluate_clause(const Clause& c, const Assignment& a) {
  bool result = false;
  for (Literal l : c) {
    auto v = a.value_of(l);
    if (!v) throw UnassignedVariableError("variable x" + std::to_string(l.var()) + " is unassigned");
    result = result || *v;
  }
  return result;
}

bool evaluate_formula(const Formula& f, const Assignment& a) {
  bool result = true;
  for (const auto& c : f) result = evaluate_clause(c, a) && result;
  return result;
}

VariableSet variables_of(const Clause& c) {
  std::vector<Var> vars;
  vars.reserve(c.size());
  for (Literal l : c) vars.push_back(l.var());
  return VariableSet(std::move(vars));
}

VariableSet variables_of(const Formula& f) {
  std::vector<Var> vars;
  for (const auto& c : f) {
    for (Literal l : c) vars.push_back(l.var());
  }
  return VariableSet(std::move(vars));
}

bool is_fully_populated(const Clause& c, const VariableSet& v) {
  if (is_tautology(c)) throw TautologyError("tautology clause " + to_string(c) + " cannot be fully populated");
  if (c.size() != v.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.literals()[i].var() != v.vars()[i]) return false;
  }
  return true;
}

bool are_siblings(const Clause& a, const Clause& b, const VariableSet& v) {
  if (is_tautology(a) || is_tautology(b)) return false;
  if (!is_fully_populated(a, v) || !is_fully_populated(b, v)) return false;
  return std::any_of(a.begin(), a.end(), [&](Literal l) { return b.contains(negate(l)); });
}

bool is_subset(const Clause& sub, const Clause& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Normalized normalize(const Formula& f) {
  Normalized out{f, {}};
  out.report.duplicates_removed = f.duplicates_removed();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& c = f.clauses()[i];
    if (c.empty()) out.report.has_empty_clause = true;
    if (is_tautology(c)) out.report.tautology_indices.push_back(i);
  }
  return out;
}

}  // namespace fpcsat
