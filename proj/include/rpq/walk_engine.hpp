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

// Product-graph search for the WALK restrictor.
//
// AnyWalkSearch          one path per answer node (shortest under BFS)
// AllShortestWalkSearch  every shortest path per answer node, built from a
//                        predecessor DAG and enumerated on pop
// CountShortestSearch    number of shortest paths per answer node
//
// All searches are pull-based cursors: next() advances the traversal only as
// far as needed to produce one more result.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rpq/product.hpp"

namespace rpq {

using BigCount = boost::multiprecision::cpp_int;

// One answer: the reached node and a witnessing path.
struct Answer {
  NodeId node;
  Path path;
};

class AnyWalkSearch {
 public:
  AnyWalkSearch(const EdgeIndex& index, const Nfa& nfa, std::optional<NodeId> start,
                Strategy strategy, Deadline deadline = {})
      : index_(&index),
        automaton_(nfa, index.graph()),
        start_(start),
        strategy_(strategy),
        deadline_(deadline),
        reached_final_(index.graph().num_nodes(), 0) {}

  std::optional<Answer> next() {
    if (!started_) {
      started_ = true;
      if (!start_ || !index_->graph().has_node(*start_)) return std::nullopt;
      push(State{*start_, automaton_.initial(), Step{kNone, Direction::kForward}, kNone});
      if (automaton_.accepts_empty()) {
        reached_final_[*start_] = 1;
        return Answer{*start_, path_to(0)};
      }
    }
    for (;;) {
      ProductMove move;
      while (scan_.next(*index_, move)) {
        const auto key = product_key(move.node, move.state, automaton_.num_states());
        if (visited_.contains(key)) continue;
        const auto id = push(State{move.node, move.state, move.step, current_});
        if (automaton_.is_final(move.state) && !reached_final_[move.node]) {
          reached_final_[move.node] = 1;
          return Answer{move.node, path_to(id)};
        }
      }
      if (open_.empty() || deadline_.expired()) return std::nullopt;
      if (strategy_ == Strategy::kBfs) {
        current_ = open_.front();
        open_.pop_front();
      } else {
        current_ = open_.back();
        open_.pop_back();
      }
      ++stats_.pops;
      const State& s = arena_[current_];
      scan_.reset(s.node, automaton_.out(s.state));
    }
  }

  const SearchStats& stats() {
    stats_.states = arena_.size();
    stats_.arena_bytes = arena_.capacity() * sizeof(State) + visited_.size() * 24;
    return stats_;
  }
  bool timed_out() const { return deadline_.was_expired(); }

 private:
  struct State {
    NodeId node;
    StateId state;
    Step step;  // edge kNone at the start state
    std::uint32_t prev;
  };

  std::uint32_t push(const State& s) {
    const auto id = static_cast<std::uint32_t>(arena_.size());
    arena_.push_back(s);
    visited_.emplace(product_key(s.node, s.state, automaton_.num_states()), id);
    open_.push_back(id);
    return id;
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
  Strategy strategy_;
  Deadline deadline_;
  bool started_ = false;
  std::vector<State> arena_;
  std::unordered_map<std::uint64_t, std::uint32_t> visited_;
  std::deque<std::uint32_t> open_;
  std::vector<char> reached_final_;
  std::uint32_t current_ = kNone;
  ProductScan scan_;
  SearchStats stats_;
};

// Visited dictionary of the all-shortest search. Each state keeps a linked
// list (first_link .. last_link) of predecessor links, all of which point at
// states exactly one level shallower. The links form a DAG whose root is the
// start state.
struct ShortestDag {
  struct State {
    NodeId node;
    StateId state;
    std::uint32_t depth;
    std::uint32_t first_link = kNone;
    std::uint32_t last_link = kNone;
  };
  struct Link {
    std::uint32_t prev;  // predecessor state
    Step step;
    std::uint32_t next = kNone;
  };

  std::vector<State> states;
  std::vector<Link> links;

  std::uint32_t add_state(NodeId node, StateId state, std::uint32_t depth) {
    states.push_back(State{node, state, depth});
    return static_cast<std::uint32_t>(states.size() - 1);
  }

  void add_link(std::uint32_t to, std::uint32_t prev, Step step) {
    const auto id = static_cast<std::uint32_t>(links.size());
    links.push_back(Link{prev, step});
    State& s = states[to];
    if (s.first_link == kNone) {
      s.first_link = id;
    } else {
      links[s.last_link].next = id;
    }
    s.last_link = id;
  }
};

// Enumerates every root-to-target path of a ShortestDag exactly once,
// depth-first over the predecessor lists. Keeps one frame per edge of the
// current path; the work between consecutive paths is proportional to the
// suffix that changes.
class ShortestPathEnumerator {
 public:
  ShortestPathEnumerator(const ShortestDag& dag, std::uint32_t target)
      : dag_(&dag), target_(target) {}

  bool next(Path& out) {
    if (!started_) {
      started_ = true;
      descend(target_);
      build(out);
      return true;
    }
    while (!frames_.empty()) {
      const std::uint32_t alternative = dag_->links[frames_.back()].next;
      ++steps_;
      if (alternative != kNone) {
        frames_.back() = alternative;
        descend(dag_->links[alternative].prev);
        build(out);
        return true;
      }
      frames_.pop_back();
    }
    return false;
  }

  // Frame pushes, advances and pops performed so far.
  std::uint64_t steps() const { return steps_; }

 private:
  void descend(std::uint32_t state) {
    while (dag_->states[state].first_link != kNone) {
      const std::uint32_t link = dag_->states[state].first_link;
      frames_.push_back(link);
      ++steps_;
      state = dag_->links[link].prev;
    }
  }

  void build(Path& out) const {
    out.nodes.clear();
    out.steps.clear();
    std::uint32_t root = target_;
    if (!frames_.empty()) root = dag_->links[frames_.back()].prev;
    out.nodes.push_back(dag_->states[root].node);
    for (std::size_t i = frames_.size(); i-- > 0;) {
      const std::uint32_t owner = i == 0 ? target_ : dag_->links[frames_[i - 1]].prev;
      out.steps.push_back(dag_->links[frames_[i]].step);
      out.nodes.push_back(dag_->states[owner].node);
    }
  }

  const ShortestDag* dag_;
  std::uint32_t target_;
  std::vector<std::uint32_t> frames_;  // frames_[0] is a link of target_
  bool started_ = false;
  std::uint64_t steps_ = 0;
};

inline ShortestPathEnumerator get_all_paths(const ShortestDag& dag, std::uint32_t state) {
  return ShortestPathEnumerator(dag, state);
}

namespace detail {

// BFS skeleton shared by the all-shortest and counting searches. Derived
// supplies create(), depth_of() and relax().
template <typename Derived>
class ShortestBfs {
 protected:
  ShortestBfs(const EdgeIndex& index, const Nfa& nfa, std::optional<NodeId> start,
              Deadline deadline)
      : index_(&index), automaton_(nfa, index.graph()), start_(start), deadline_(deadline) {}

  // Pops the next state; returns kNone when the frontier is exhausted or the
  // deadline has passed.
  std::uint32_t pop() {
    if (!started_) {
      started_ = true;
      if (!start_ || !index_->graph().has_node(*start_)) return kNone;
      const auto id = derived().create(*start_, automaton_.initial(), 0);
      visited_.emplace(product_key(*start_, automaton_.initial(), automaton_.num_states()), id);
      open_.push_back(id);
    }
    if (open_.empty() || deadline_.expired()) return kNone;
    const std::uint32_t id = open_.front();
    open_.pop_front();
    ++stats_.pops;
    return id;
  }

  // Whether popping a state produces answers for its node.
  bool emits(NodeId node, StateId state, std::uint32_t depth) {
    bool answer;
    if (depth == 0) {
      start_answered_ = automaton_.accepts_empty();
      answer = start_answered_;
    } else {
      answer = automaton_.is_final(state) && !(start_answered_ && node == *start_);
    }
    return answer && (!only_ || *only_ == node);
  }

  void expand(std::uint32_t id, NodeId node, StateId state, std::uint32_t depth) {
    scan_.reset(node, automaton_.out(state));
    ProductMove move;
    while (scan_.next(*index_, move)) {
      const auto key = product_key(move.node, move.state, automaton_.num_states());
      auto it = visited_.find(key);
      if (it == visited_.end()) {
        const auto to = derived().create(move.node, move.state, depth + 1);
        visited_.emplace(key, to);
        open_.push_back(to);
        derived().relax(to, id, move.step);
      } else if (derived().depth_of(it->second) == depth + 1) {
        derived().relax(it->second, id, move.step);
      }
    }
  }

  Derived& derived() { return static_cast<Derived&>(*this); }

 public:
  // Restricts answers to one node; other groups are never enumerated.
  void only_answers_at(NodeId node) { only_ = node; }

 protected:

  const EdgeIndex* index_;
  BoundAutomaton automaton_;
  std::optional<NodeId> start_;
  Deadline deadline_;
  bool started_ = false;
  bool start_answered_ = false;
  std::optional<NodeId> only_;
  std::unordered_map<std::uint64_t, std::uint32_t> visited_;
  std::deque<std::uint32_t> open_;
  ProductScan scan_;
  SearchStats stats_;
};

}  // namespace detail

// ALL SHORTEST WALK. Requires an unambiguous automaton with at most one final
// state (the planner guarantees this); otherwise paths may repeat.
class AllShortestWalkSearch : public detail::ShortestBfs<AllShortestWalkSearch> {
  friend class detail::ShortestBfs<AllShortestWalkSearch>;

 public:
  AllShortestWalkSearch(const EdgeIndex& index, const Nfa& nfa, std::optional<NodeId> start,
                        Deadline deadline = {})
      : ShortestBfs(index, nfa, start, deadline) {}

  // Answers for one node are contiguous, and node groups come out in
  // non-decreasing path length.
  std::optional<Answer> next() {
    for (;;) {
      if (enumerator_) {
        if (deadline_.expired()) return std::nullopt;
        Path p;
        if (enumerator_->next(p)) return Answer{dag_.states[pending_].node, std::move(p)};
        enumeration_steps_ += enumerator_->steps();
        enumerator_.reset();
      }
      if (pending_ != kNone) {
        const auto s = dag_.states[pending_];
        expand(pending_, s.node, s.state, s.depth);
        pending_ = kNone;
      }
      const std::uint32_t id = pop();
      if (id == kNone) return std::nullopt;
      pending_ = id;
      const auto s = dag_.states[id];
      if (emits(s.node, s.state, s.depth)) enumerator_.emplace(dag_, id);
    }
  }

  const ShortestDag& dag() const { return dag_; }

  // Enumerator work over all completed groups.
  std::uint64_t enumeration_steps() const { return enumeration_steps_; }

  const SearchStats& stats() {
    stats_.states = dag_.states.size();
    stats_.arena_bytes = dag_.states.capacity() * sizeof(ShortestDag::State) +
                         dag_.links.capacity() * sizeof(ShortestDag::Link) +
                         visited_.size() * 24;
    return stats_;
  }
  bool timed_out() const { return deadline_.was_expired(); }

 private:
  std::uint32_t create(NodeId node, StateId state, std::uint32_t depth) {
    return dag_.add_state(node, state, depth);
  }
  std::uint32_t depth_of(std::uint32_t id) const { return dag_.states[id].depth; }
  void relax(std::uint32_t to, std::uint32_t from, Step step) { dag_.add_link(to, from, step); }

  ShortestDag dag_;
  std::uint32_t pending_ = kNone;
  std::optional<ShortestPathEnumerator> enumerator_;
  std::uint64_t enumeration_steps_ = 0;
};

struct CountAnswer {
  NodeId node;
  std::uint32_t length;
  BigCount count;
};

// Number of shortest witnessing paths per answer node. Same preconditions as
// AllShortestWalkSearch.
class CountShortestSearch : public detail::ShortestBfs<CountShortestSearch> {
  friend class detail::ShortestBfs<CountShortestSearch>;

 public:
  CountShortestSearch(const EdgeIndex& index, const Nfa& nfa, std::optional<NodeId> start,
                      Deadline deadline = {})
      : ShortestBfs(index, nfa, start, deadline) {}

  std::optional<CountAnswer> next() {
    for (;;) {
      const std::uint32_t id = pop();
      if (id == kNone) return std::nullopt;
      const auto s = states_[id];
      expand(id, s.node, s.state, s.depth);
      if (emits(s.node, s.state, s.depth)) {
        return CountAnswer{s.node, s.depth, counts_[id]};
      }
    }
  }

  const SearchStats& stats() {
    stats_.states = states_.size();
    stats_.arena_bytes = states_.capacity() * sizeof(State) + visited_.size() * 24;
    return stats_;
  }
  bool timed_out() const { return deadline_.was_expired(); }

 private:
  struct State {
    NodeId node;
    StateId state;
    std::uint32_t depth;
  };

  std::uint32_t create(NodeId node, StateId state, std::uint32_t depth) {
    states_.push_back(State{node, state, depth});
    counts_.emplace_back(depth == 0 ? 1 : 0);
    return static_cast<std::uint32_t>(states_.size() - 1);
  }
  std::uint32_t depth_of(std::uint32_t id) const { return states_[id].depth; }
  void relax(std::uint32_t to, std::uint32_t from, Step) { counts_[to] += counts_[from]; }

  std::vector<State> states_;
  std::vector<BigCount> counts_;
};

// All shortest paths from `start` to every reachable node, ignoring labels
// (forward edges only). Runs the all-shortest search with a one-state
// automaton accepting every label word.
inline AllShortestWalkSearch enumerate_all_shortest_unlabeled(const EdgeIndex& index,
                                                              std::optional<NodeId> start,
                                                              Deadline deadline = {}) {
  std::vector<std::string> labels;
  for (LabelId l = 0; l < index.graph().num_labels(); ++l) {
    labels.push_back(index.graph().label_name(l));
  }
  return AllShortestWalkSearch(index, universal_automaton(labels), start, deadline);
}

// Groups consecutive answers by node.
template <typename Search>
std::vector<std::pair<NodeId, std::vector<Path>>> collect_groups(Search& search) {
  std::vector<std::pair<NodeId, std::vector<Path>>> groups;
  while (auto a = search.next()) {
    if (groups.empty() || groups.back().first != a->node) {
      groups.emplace_back(a->node, std::vector<Path>{});
    }
    groups.back().second.push_back(std::move(a->path));
  }
  return groups;
}

}  // namespace rpq
