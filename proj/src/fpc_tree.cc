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

#include "fpcsat/fpc_tree.h"

#include <algorithm>
#include <ostream>
#include <string>

namespace fpcsat {

FpcTree::FpcTree(std::size_t node_budget)
    : budget_(std::min<std::size_t>(node_budget, std::numeric_limits<Ref>::max())) {
  if (node_budget == 0) throw Error("node budget must be at least 1");
}

FpcTree::Ref FpcTree::allocate(Var v) {
  ++node_count_;
  peak_nodes_ = std::max(peak_nodes_, node_count_);
  if (!free_.empty()) {
    Ref r = free_.back();
    free_.pop_back();
    nodes_[static_cast<std::size_t>(r)] = Node{v, kOpen, kOpen};
    return r;
  }
  nodes_.push_back(Node{v, kOpen, kOpen});
  return static_cast<Ref>(nodes_.size() - 1);
}

std::size_t FpcTree::release(Ref r) {
  if (r == kOpen) return 1;
  if (r == kNull) return 0;
  std::size_t open = 0;
  std::vector<Ref> stack{r};
  while (!stack.empty()) {
    Ref cur = stack.back();
    stack.pop_back();
    const Node n = nodes_[static_cast<std::size_t>(cur)];
    for (Ref child : {n.left, n.right}) {
      if (child == kOpen) {
        ++open;
      } else if (child >= 0) {
        stack.push_back(child);
      }
    }
    --node_count_;
    free_.push_back(cur);
  }
  return open;
}

// Slot ids: -1 is the root pointer, 2*node + side addresses a child pointer.
FpcTree::Ref& FpcTree::slot(std::int64_t id) {
  if (id < 0) return root_;
  Node& n = nodes_[static_cast<std::size_t>(id >> 1)];
  return (id & 1) ? n.right : n.left;
}

RegisterStatus FpcTree::register_variable(Var v) {
  if (is_registered(v)) throw Error("variable x" + std::to_string(v) + " is already registered");
  if (open_count_ == 0) return RegisterStatus::kClosed;
  if (node_count_ + open_count_ > budget_) return RegisterStatus::kBudgetExceeded;

  std::vector<std::int64_t> open_slots;
  open_slots.reserve(open_count_);
  if (root_ == kOpen) {
    open_slots.push_back(-1);
  } else if (root_ >= 0) {
    std::vector<Ref> stack{root_};
    while (!stack.empty()) {
      Ref cur = stack.back();
      stack.pop_back();
      const Node& n = nodes_[static_cast<std::size_t>(cur)];
      const Ref kids[2] = {n.left, n.right};
      for (int side = 0; side < 2; ++side) {
        if (kids[side] == kOpen) {
          open_slots.push_back(2 * static_cast<std::int64_t>(cur) + side);
        } else if (kids[side] >= 0) {
          stack.push_back(kids[side]);
        }
      }
    }
  }

  nodes_.reserve(nodes_.size() + open_slots.size());
  for (auto id : open_slots) {
    Ref fresh = allocate(v);
    slot(id) = fresh;
  }
  open_count_ *= 2;
  if (depth_of_.size() <= v) depth_of_.resize(static_cast<std::size_t>(v) + 1, -1);
  depth_of_[v] = static_cast<std::int32_t>(order_.size());
  order_.push_back(v);
  return RegisterStatus::kOk;
}

std::size_t FpcTree::eliminate(const Clause& c) {
  // Per depth: 0 = variable not in c, 1 = follow left only, 2 = right only.
  std::vector<std::uint8_t> want(order_.size(), 0);
  for (Literal l : c) {
    if (!is_registered(l.var())) {
      throw UnassignedVariableError("variable x" + std::to_string(l.var()) + " is not registered in the tree");
    }
    auto& w = want[static_cast<std::size_t>(depth_of_[l.var()])];
    if (w != 0) return 0;  // complemented pair: no path contains both
    w = l.is_negative() ? 1 : 2;
  }

  std::size_t nulled = 0;
  auto cut = [&](std::int64_t id) {
    Ref& s = slot(id);
    if (s == kNull) return;
    const Ref old = s;
    s = kNull;
    open_count_ -= release(old);
    ++nulled;
  };

  if (c.empty()) {
    cut(-1);
    return nulled;
  }
  if (root_ < 0) return 0;

  struct Item {
    Ref node;
    std::uint32_t matched;
  };
  std::vector<Item> stack{{root_, 0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const Node n = nodes_[static_cast<std::size_t>(it.node)];
    const std::uint8_t w = want[static_cast<std::size_t>(depth_of_[n.var])];
    const std::uint32_t matched = it.matched + (w != 0 ? 1 : 0);
    for (int side = 0; side < 2; ++side) {
      if (w != 0 && w != side + 1) continue;
      const std::int64_t id = 2 * static_cast<std::int64_t>(it.node) + side;
      const Ref child = side ? n.right : n.left;
      if (matched == c.size()) {
        cut(id);
      } else if (child >= 0) {
        stack.push_back({child, matched});
      }
    }
  }
  return nulled;
}

std::vector<Clause> FpcTree::open_fpcs(std::size_t limit) const {
  std::vector<Clause> out;
  if (limit == 0 || root_ == kNull) return out;
  if (root_ == kOpen) {
    out.emplace_back();
    return out;
  }

  struct Frame {
    Ref node;
    int side;
  };
  std::vector<Frame> stack{{root_, 0}};
  std::vector<Literal> path;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.side == 2) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const int side = top.side++;
    const Node& n = nodes_[static_cast<std::size_t>(top.node)];
    const Ref child = side ? n.right : n.left;
    const Literal lit = side ? Literal::positive(n.var) : Literal::negative(n.var);
    if (child == kOpen) {
      path.push_back(lit);
      out.emplace_back(path);
      path.pop_back();
      if (out.size() >= limit) return out;
    } else if (child >= 0) {
      path.push_back(lit);
      stack.push_back({child, 0});
    }
  }
  return out;
}

void FpcTree::dump(std::ostream& os) const {
  auto state = [](Ref r) -> const char* {
    if (r == kOpen) return "OPEN";
    if (r == kNull) return "NULL";
    return "node";
  };
  os << "root=" << state(root_) << '\n';
  if (root_ < 0) return;
  std::vector<std::pair<Ref, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [r, depth] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[static_cast<std::size_t>(r)];
    os << std::string(2 * depth, ' ') << '[' << depth << "] x" << n.var << " L=" << state(n.left)
       << " R=" << state(n.right) << '\n';
    if (n.right >= 0) stack.emplace_back(n.right, depth + 1);
    if (n.left >= 0) stack.emplace_back(n.left, depth + 1);
  }
}

}  // namespace fpcsat
