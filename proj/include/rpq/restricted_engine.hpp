// Copyright 2026 The rpq Authors
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

// Exhaustive product-graph enumeration for the TRAIL, SIMPLE and ACYCLIC
// restrictors. Every search state owns exactly one path (its prev chain), and
// an extension is kept only if the path in the base graph still satisfies the
// restrictor.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "rpq/product.hpp"
#include "rpq/walk_engine.hpp"

namespace rpq {

enum class Restrictor { kWalk, kTrail, kSimple, kAcyclic };

inline const char* to_string(Restrictor r) {
  switch (r) {
    case Restrictor::kWalk: return "walk";
    case Restrictor::kTrail: return "trail";
    case Restrictor::kSimple: return "simple";
    case Restrictor::kAcyclic: return "acyclic";
  }
  return "?";
}

struct RestrictedState {
  NodeId node;
  StateId state;
  std::uint32_t depth;
  Step step;           // edge kNone at the start state
  std::uint32_t prev;  // kNone at the start state
};

// Whether the path ending in arena[prefix] may be extended by `next`.
//
// TRAIL rejects a repeated edge. ACYCLIC rejects a repeated node. SIMPLE
// rejects a repeated node except that the path may come back to its first
// node; once it has, it cannot be extended further.
inline bool is_valid(const std::vector<RestrictedState>& arena, std::uint32_t prefix,
                     const ProductMove& next, Restrictor restrictor) {
  if (restrictor == Restrictor::kSimple && arena[prefix].prev != kNone) {
    std::uint32_t root = prefix;
    while (arena[root].prev != kNone) root = arena[root].prev;
    if (arena[root].node == arena[prefix].node) return false;
  }
  for (std::uint32_t s = prefix; s != kNone; s = arena[s].prev) {
    const RestrictedState& st = arena[s];
    switch (restrictor) {
      case Restrictor::kAcyclic:
        if (st.node == next.node) return false;
        break;
      case Restrictor::kSimple:
        if (st.node == next.node && st.prev != kNone) return false;
        break;
      case Restrictor::kTrail:
        if (st.step.edge == next.step.edge) return false;
        break;
      case Restrictor::kWalk:
        return true;
    }
  }
  return true;
}

class RestrictedSearch {
 public:
  enum class Selector {
    kAll,          // every restricted path
    kAllShortest,  // per answer node, the restricted paths of minimal length
    kAny,          // one restricted path per answer node (shortest under BFS)
  };

  RestrictedSearch(const EdgeIndex& index, const Nfa& nfa, std::optional<NodeId> start,
                   Restrictor restrictor, Selector selector, Strategy strategy,
                   Deadline deadline = {})
      : index_(&index),
        automaton_(nfa, index.graph()),
        start_(start),
        restrictor_(restrictor),
        selector_(selector),
        strategy_(strategy),
        deadline_(deadline) {
    if (restrictor == Restrictor::kWalk) throw Error("restricted search needs a restrictor");
    if (selector == Selector::kAllShortest && strategy == Strategy::kDfs) {
      throw Error("ALL SHORTEST requires breadth-first search");
    }
    if (selector_ == Selector::kAny) {
      reached_set_.assign(index.graph().num_nodes(), 0);
    } else if (selector_ == Selector::kAllShortest) {
      reached_depth_.assign(index.graph().num_nodes(), kNone);
    }
  }

  std::optional<Answer> next() {
    if (!started_) {
      started_ = true;
      if (!start_ || !index_->graph().has_node(*start_)) return std::nullopt;
      arena_.push_back(RestrictedState{*start_, automaton_.initial(), 0,
                                       Step{kNone, Direction::kForward}, kNone});
      created_ = 1;
      open_.push_back(0);
      if (automaton_.accepts_empty()) {
        record(*start_, 0);
        return Answer{*start_, path_to(0)};
      }
    }
    for (;;) {
      ProductMove move;
      while (scan_.next(*index_, move)) {
        if (!is_valid(arena_, current_, move, restrictor_)) continue;
        const auto id = static_cast<std::uint32_t>(arena_.size());
        arena_.push_back(RestrictedState{move.node, move.state, arena_[current_].depth + 1,
                                         move.step, current_});
        ++created_;
        open_.push_back(id);
        if (automaton_.is_final(move.state) && accept(move.node, arena_[id].depth)) {
          return Answer{move.node, path_to(id)};
        }
      }
      if (open_.empty() || deadline_.expired()) return std::nullopt;
      if (strategy_ == Strategy::kBfs) {
        current_ = open_.front();
        open_.pop_front();
      } else {
        // Open ids increase along the stack, so everything above the popped
        // id belongs to subtrees that are finished.
        current_ = open_.back();
        open_.pop_back();
        arena_.resize(current_ + 1);
      }
      ++stats_.pops;
      scan_.reset(arena_[current_].node, automaton_.out(arena_[current_].state));
    }
  }

  const std::vector<RestrictedState>& arena() const { return arena_; }

  const SearchStats& stats() {
    stats_.states = created_;
    stats_.arena_bytes = arena_.capacity() * sizeof(RestrictedState);
    return stats_;
  }
  bool timed_out() const { return deadline_.was_expired(); }

 private:
  void record(NodeId node, std::uint32_t depth) {
    if (selector_ == Selector::kAny) reached_set_[node] = 1;
    if (selector_ == Selector::kAllShortest) reached_depth_[node] = depth;
  }

  bool accept(NodeId node, std::uint32_t depth) {
    switch (selector_) {
      case Selector::kAll:
        return true;
      case Selector::kAny:
        if (reached_set_[node]) return false;
        reached_set_[node] = 1;
        return true;
      case Selector::kAllShortest:
        if (reached_depth_[node] == kNone) {
          reached_depth_[node] = depth;
          return true;
        }
        return reached_depth_[node] == depth;
    }
    return false;
  }

  Path path_to(std::uint32_t id) const {
    Path p;
    for (std::uint32_t i = id; i != kNone; i = arena_[i].prev) {
      p.nodes.push_back(arena_[i].node);
      if (arena_[i].prev != kNone) p.steps.push_back(arena_[i].step);
    }
    std::reverse(p.nodes.begin(), p.nodes.end());
    std::reverse(p.steps.begin(), p.steps.end());
    return p;
  }

  const EdgeIndex* index_;
  BoundAutomaton automaton_;
  std::optional<NodeId> start_;
  Restrictor restrictor_;
  Selector selector_;
  Strategy strategy_;
  Deadline deadline_;
  bool started_ = false;
  std::vector<RestrictedState> arena_;
  std::deque<std::uint32_t> open_;
  std::vector<char> reached_set_;
  std::vector<std::uint32_t> reached_depth_;
  std::uint32_t current_ = kNone;
  std::uint64_t created_ = 0;
  ProductScan scan_;
  SearchStats stats_;
};

// ALL / ALL SHORTEST over a restrictor. Needs an unambiguous automaton.
inline RestrictedSearch all_restricted(const EdgeIndex& index, const Nfa& nfa,
                                       std::optional<NodeId> start, Restrictor restrictor,
                                       bool all_shortest, Strategy strategy,
                                       Deadline deadline = {}) {
  return RestrictedSearch(index, nfa, start, restrictor,
                          all_shortest ? RestrictedSearch::Selector::kAllShortest
                                       : RestrictedSearch::Selector::kAll,
                          strategy, deadline);
}

// ANY / ANY SHORTEST over a restrictor. Any automaton works.
inline RestrictedSearch any_restricted(const EdgeIndex& index, const Nfa& nfa,
                                       std::optional<NodeId> start, Restrictor restrictor,
                                       bool shortest, Strategy strategy,
                                       Deadline deadline = {}) {
  if (shortest && strategy == Strategy::kDfs) {
    throw Error("ANY SHORTEST requires breadth-first search");
  }
  return RestrictedSearch(index, nfa, start, restrictor, RestrictedSearch::Selector::kAny,
                          strategy, deadline);
}

}  // namespace rpq
