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
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "fpcsat/cnf.h"

namespace fpcsat {

enum class RegisterStatus { kOk, kClosed, kBudgetExceeded };

/// Binary tree over fully populated clauses.
///
/// Level d of the tree branches on the d-th registered variable: the left
/// edge stands for the negative literal, the right edge for the positive one.
/// Each pointer is OPEN (a surviving clause ending here, and the insertion
/// point for the next variable), NULL (eliminated) or a child node. After k
/// registrations every root-to-OPEN path spells a fully populated clause over
/// the k registered variables.
///
/// Node storage is an index arena with a free list; NULL-ing a pointer
/// releases its whole subtree, so node_count() is live memory and the budget
/// caps it.
class FpcTree {
 public:
  static constexpr std::size_t kDefaultBudget = std::size_t{1} << 24;

  explicit FpcTree(std::size_t node_budget = kDefaultBudget);

  /// Splits every OPEN pointer on `v`. Returns kClosed when no OPEN pointer
  /// exists and kBudgetExceeded when the split would exceed the node budget;
  /// in both cases the tree is left untouched and `v` stays unregistered.
  /// Throws Error if `v` is already registered.
  RegisterStatus register_variable(Var v);

  /// NULLs the shallowest pointer on every path whose literal set contains
  /// `c`. Returns the number of pointers NULL-ed. A tautology never matches
  /// a path. Throws UnassignedVariableError for an unregistered variable.
  std::size_t eliminate(const Clause& c);

  /// Surviving fully populated clauses in depth-first order, negative edge
  /// first. At most `limit` clauses are produced.
  std::vector<Clause> open_fpcs(std::size_t limit = std::numeric_limits<std::size_t>::max()) const;

  bool is_closed() const { return open_count_ == 0; }
  std::size_t open_count() const { return open_count_; }
  std::size_t node_count() const { return node_count_; }
  std::size_t peak_nodes() const { return peak_nodes_; }
  std::size_t node_budget() const { return budget_; }
  std::span<const Var> insertion_order() const { return order_; }
  bool is_registered(Var v) const { return v < depth_of_.size() && depth_of_[v] >= 0; }

  /// One line per node in pre-order: indentation, depth, variable, and the
  /// state of the left and right pointers.
  void dump(std::ostream& os) const;

 private:
  using Ref = std::int32_t;
  static constexpr Ref kOpen = -1;
  static constexpr Ref kNull = -2;

  struct Node {
    Var var;
    Ref left;
    Ref right;
  };

  Ref allocate(Var v);
  /// Releases the subtree under `r`; returns the OPEN pointers it held.
  std::size_t release(Ref r);
  Ref& slot(std::int64_t id);

  std::vector<Node> nodes_;
  std::vector<Ref> free_;
  Ref root_ = kOpen;
  std::vector<Var> order_;
  std::vector<std::int32_t> depth_of_;
  std::size_t budget_;
  std::size_t node_count_ = 0;
  std::size_t open_count_ = 1;
  std::size_t peak_nodes_ = 0;
};

}  // namespace fpcsat
