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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpcsat {

using Var = std::uint32_t;

/// Largest variable index representable by a Literal.
inline constexpr Var kMaxVar = (Var{1} << 30) - 1;

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable referenced by an operation was not assigned / not registered.
class UnassignedVariableError : public Error {
 public:
  using Error::Error;
};

/// A clause holding a complemented pair was passed where one is not allowed.
class TautologyError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its explicit size limit.
class LimitExceededError : public Error {
 public:
  using Error::Error;
};

/// A signed reference to a variable. Ordered by variable, negative first.
class Literal {
 public:
  static constexpr Literal positive(Var v) { return Literal(v, false); }
  static constexpr Literal negative(Var v) { return Literal(v, true); }
  /// From the DIMACS signed-integer form; throws Error on 0 or overflow.
  static Literal from_dimacs(std::int64_t value);

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool is_negative() const { return (code_ & 1U) == 0; }
  constexpr bool is_positive() const { return !is_negative(); }
  constexpr std::int64_t dimacs() const {
    return is_negative() ? -static_cast<std::int64_t>(var())
                         : static_cast<std::int64_t>(var());
  }
  constexpr std::uint32_t code() const { return code_; }

  friend constexpr Literal negate(Literal l) {
    Literal out = l;
    out.code_ ^= 1U;
    return out;
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;
  friend constexpr bool operator==(Literal, Literal) = default;

 private:
  constexpr Literal(Var v, bool neg) : code_((v << 1) | (neg ? 0U : 1U)) {
    if (v == 0 || v > kMaxVar) throw Error("literal variable index out of range");
  }

  std::uint32_t code_;
};

std::string to_string(Literal l);

/// A set of literals read as their disjunction. The empty clause is the
/// null clause and is always false.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits);
  explicit Clause(std::vector<Literal> lits);

  /// Builds a clause and reports how many repeated literals were collapsed.
  static Clause collect(std::vector<Literal> lits, std::size_t& duplicates);
  /// From DIMACS integers, e.g. {1, -2}.
  static Clause from_dimacs(std::initializer_list<std::int64_t> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool contains(Literal l) const;
  /// Literal of `v` in this clause, if exactly one polarity occurs.
  std::optional<Literal> literal_of(Var v) const;
  bool mentions(Var v) const;

  friend auto operator<=>(const Clause&, const Clause&) = default;
  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;  // sorted, unique
};

std::string to_string(const Clause& c);

/// Sorted set of variable indices.
class VariableSet {
 public:
  VariableSet() = default;
  VariableSet(std::initializer_list<Var> vars);
  explicit VariableSet(std::vector<Var> vars);

  /// {1, ..., n}
  static VariableSet range(std::size_t n);

  std::span<const Var> vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  bool contains(Var v) const;
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }
  Var max_var() const { return vars_.empty() ? 0 : vars_.back(); }

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<Var> vars_;
};

/// A conjunction of clauses with set semantics. Clauses keep the order of
/// their first appearance; later duplicates are dropped and counted.
class Formula {
 public:
  Formula() = default;
  Formula(std::initializer_list<Clause> clauses);
  explicit Formula(std::vector<Clause> clauses);

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// Number of clauses supplied before deduplication.
  std::size_t original_count() const { return original_count_; }
  std::size_t duplicates_removed() const { return original_count_ - clauses_.size(); }

  bool contains(const Clause& c) const;
  Var max_var() const;

  /// Same clause set, independent of order.
  bool same_clauses(const Formula& other) const;

 private:
  std::vector<Clause> clauses_;
  std::size_t original_count_ = 0;
};

/// Partial valuation indexed by variable.
class Assignment {
 public:
  Assignment() = default;

  void set(Var v, bool value);
  std::optional<bool> get(Var v) const;
  bool is_assigned(Var v) const { return get(v).has_value(); }
  /// Truth of a literal, if its variable is assigned.
  std::optional<bool> value_of(Literal l) const;

  std::vector<Var> assigned_vars() const;
  std::size_t assigned_count() const;
  bool is_total_over(const VariableSet& vs) const;

  friend bool operator==(const Assignment& a, const Assignment& b);

 private:
  std::vector<std::int8_t> values_;  // -1 unassigned, 0 false, 1 true
};

std::string to_string(const Assignment& a);

bool is_tautology(const Clause& c);

/// Throws UnassignedVariableError when `a` misses a variable of `c`.
bool evaluate_clause(const Clause& c, const Assignment& a);
bool evaluate_formula(const Formula& f, const Assignment& a);

VariableSet variables_of(const Clause& c);
VariableSet variables_of(const Formula& f);

/// Throws TautologyError on a tautology clause.
bool is_fully_populated(const Clause& c, const VariableSet& v);
bool are_siblings(const Clause& a, const Clause& b, const VariableSet& v);
bool is_subset(const Clause& sub, const Clause& super);

struct NormalizeReport {
  std::size_t duplicates_removed = 0;
  /// Positions (in the normalized formula) of tautology clauses.
  std::vector<std::size_t> tautology_indices;
  bool has_empty_clause = false;
};

struct Normalized {
  Formula formula;
  NormalizeReport report;
};

Normalized normalize(const Formula& f);

}  // namespace fpcsat
