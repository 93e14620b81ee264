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

// On-the-fly product of a graph and an automaton. Nothing here materializes
// the product graph: a ProductScan composes the automaton's transitions of a
// state with the graph adjacency of a node, one move at a time.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rpq/csr.hpp"
#include "rpq/nfa.hpp"
#include "rpq/path.hpp"

namespace rpq {

enum class Strategy { kBfs, kDfs };

inline const char* to_string(Strategy s) { return s == Strategy::kBfs ? "bfs" : "dfs"; }

using Clock = std::chrono::steady_clock;

// Counters every engine maintains.
struct SearchStats {
  std::uint64_t pops = 0;    // frontier pops
  std::uint64_t states = 0;  // search states created
  std::uint64_t arena_bytes = 0;
};

struct BoundTransition {
  LabelId label;  // kNone when the graph has no such label
  Direction direction;
  StateId target;
};

// An Nfa with its label names resolved against one graph.
class BoundAutomaton {
 public:
  BoundAutomaton(const Nfa& nfa, const GraphDB& g)
      : num_states_(nfa.num_states()),
        initial_(nfa.initial()),
        accepts_empty_(nfa.accepts_empty()),
        offsets_(nfa.num_states() + 1, 0) {
    is_final_.reserve(num_states_);
    for (StateId q = 0; q < num_states_; ++q) {
      is_final_.push_back(nfa.is_final(q));
      for (const Transition& t : nfa.out(q)) {
        const auto label = g.find_label(t.symbol.label);
        transitions_.push_back({label.value_or(kNone), t.symbol.direction, t.to});
      }
      offsets_[q + 1] = transitions_.size();
    }
  }

  std::size_t num_states() const { return num_states_; }
  StateId initial() const { return initial_; }
  bool is_final(StateId q) const { return is_final_[q]; }
  bool accepts_empty() const { return accepts_empty_; }

  std::span<const BoundTransition> out(StateId q) const {
    return std::span<const BoundTransition>(transitions_)
        .subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
  }

 private:
  std::size_t num_states_;
  StateId initial_;
  bool accepts_empty_;
  std::vector<bool> is_final_;
  std::vector<BoundTransition> transitions_;
  std::vector<std::size_t> offsets_;
};

struct ProductMove {
  NodeId node;
  StateId state;
  Step step;
};

// Resumable enumeration of the product-graph successors of (node, state):
// transitions in automaton order, then graph neighbors in index order.
class ProductScan {
 public:
  void reset(NodeId node, std::span<const BoundTransition> transitions) {
    node_ = node;
    transitions_ = transitions;
    t_ = 0;
    neighbors_ = {};
    i_ = 0;
    active_ = true;
  }

  bool active() const { return active_; }

  bool next(const EdgeIndex& index, ProductMove& move) {
    while (active_) {
      if (i_ < neighbors_.size()) {
        const BoundTransition& t = transitions_[t_ - 1];
        const Adjacent& a = neighbors_[i_++];
        move = ProductMove{a.node, t.target, Step{a.edge, t.direction}};
        return true;
      }
      if (t_ == transitions_.size()) {
        active_ = false;
        break;
      }
      const BoundTransition& t = transitions_[t_++];
      neighbors_ = t.label == kNone ? std::span<const Adjacent>{}
                                    : index.neighbors(node_, t.label, t.direction, scratch_);
      i_ = 0;
    }
    return false;
  }

 private:
  NodeId node_ = 0;
  std::span<const BoundTransition> transitions_;
  std::size_t t_ = 0;
  std::span<const Adjacent> neighbors_;
  std::size_t i_ = 0;
  bool active_ = false;
  std::vector<Adjacent> scratch_;
};

// Wall-clock budget observed by the executing thread only.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::optional<Clock::time_point> at) : at_(at) {}

  bool expired() {
    if (!at_ || expired_) return expired_;
    expired_ = Clock::now() >= *at_;
    return expired_;
  }
  bool was_expired() const { return expired_; }

 private:
  std::optional<Clock::time_point> at_;
  bool expired_ = false;
};

// (node, state) -> dense key for Visited dictionaries.
inline std::uint64_t product_key(NodeId node, StateId state, std::size_t num_states) {
  return static_cast<std::uint64_t>(node) * num_states + state;
}

}  // namespace rpq
