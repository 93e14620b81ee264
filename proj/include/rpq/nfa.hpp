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

// Epsilon-free automata over (label, direction) symbols, and the
// transformations the engines rely on: Glushkov construction, ambiguity
// test, subset construction and single-final normalization.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rpq/regex.hpp"
#include "rpq/types.hpp"

namespace rpq {

class AutomatonBlowUp : public Error {
 public:
  explicit AutomatonBlowUp(std::size_t ceiling)
      : Error("automaton blow-up: subset construction exceeded " + std::to_string(ceiling) +
              " states"),
        ceiling_(ceiling) {}

  std::size_t ceiling() const { return ceiling_; }

 private:
  std::size_t ceiling_;
};

enum class Ambiguity : std::uint8_t { kUnknown, kUnambiguous, kAmbiguous };

struct Transition {
  StateId from;
  Symbol symbol;
  StateId to;

  auto operator<=>(const Transition&) const = default;
  bool operator==(const Transition&) const = default;
};

class Nfa {
 public:
  Nfa() : Nfa(1, 0, {}, {}) {}

  // Transitions are sorted by (from, symbol, to) and deduplicated.
  // `accepts_epsilon` records that the empty word is accepted even though the
  // initial state is not final (see single_final).
  Nfa(std::size_t num_states, StateId initial, std::vector<StateId> finals,
      std::vector<Transition> transitions, bool accepts_epsilon = false,
      Ambiguity ambiguity = Ambiguity::kUnknown)
      : num_states_(num_states),
        initial_(initial),
        finals_(std::move(finals)),
        transitions_(std::move(transitions)),
        accepts_epsilon_(accepts_epsilon),
        ambiguity_(ambiguity) {
    if (initial_ >= num_states_) throw Error("initial state out of range");
    std::sort(finals_.begin(), finals_.end());
    finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
    is_final_.assign(num_states_, false);
    for (StateId f : finals_) {
      if (f >= num_states_) throw Error("final state out of range");
      is_final_[f] = true;
    }
    offsets_.assign(num_states_ + 1, 0);
    for (const Transition& t : transitions_) {
      if (t.from >= num_states_ || t.to >= num_states_) {
        throw Error("transition endpoint out of range");
      }
      ++offsets_[t.from + 1];
    }
    for (std::size_t q = 0; q < num_states_; ++q) offsets_[q + 1] += offsets_[q];

    deterministic_ = true;
    for (std::size_t i = 1; i < transitions_.size(); ++i) {
      if (transitions_[i].from == transitions_[i - 1].from &&
          transitions_[i].symbol == transitions_[i - 1].symbol) {
        deterministic_ = false;
        break;
      }
    }
    if (deterministic_) ambiguity_ = Ambiguity::kUnambiguous;
  }

  std::size_t num_states() const { return num_states_; }
  StateId initial() const { return initial_; }
  const std::vector<StateId>& finals() const { return finals_; }
  bool is_final(StateId q) const { return is_final_[q]; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  // Transitions leaving q, ordered by (symbol, target).
  std::span<const Transition> out(StateId q) const {
    return std::span<const Transition>(transitions_)
        .subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
  }

  bool accepts_epsilon_flag() const { return accepts_epsilon_; }
  bool accepts_empty() const { return accepts_epsilon_ || is_final_[initial_]; }
  bool is_deterministic() const { return deterministic_; }
  bool has_single_final() const { return finals_.size() == 1; }
  Ambiguity ambiguity() const { return ambiguity_; }

  std::vector<Symbol> alphabet() const {
    std::set<Symbol> symbols;
    for (const Transition& t : transitions_) symbols.insert(t.symbol);
    return {symbols.begin(), symbols.end()};
  }

  bool accepts(std::span<const Symbol> word) const {
    if (word.empty()) return accepts_empty();
    std::vector<char> current(num_states_, 0);
    current[initial_] = 1;
    for (const Symbol& s : word) {
      std::vector<char> next(num_states_, 0);
      bool any = false;
      for (StateId q = 0; q < num_states_; ++q) {
        if (!current[q]) continue;
        for (const Transition& t : out(q)) {
          if (t.symbol == s) next[t.to] = any = true;
        }
      }
      if (!any) return false;
      current = std::move(next);
    }
    for (StateId q = 0; q < num_states_; ++q) {
      if (current[q] && is_final_[q]) return true;
    }
    return false;
  }

 private:
  std::size_t num_states_;
  StateId initial_;
  std::vector<StateId> finals_;
  std::vector<Transition> transitions_;
  bool accepts_epsilon_;
  Ambiguity ambiguity_;
  std::vector<bool> is_final_;
  std::vector<std::size_t> offsets_;
  bool deterministic_ = false;
};

namespace detail {

class GlushkovBuilder {
 public:
  struct Info {
    bool nullable = false;
    std::set<StateId> first;
    std::set<StateId> last;
  };

  Info visit(const Regex& r) {
    switch (r.kind) {
      case Regex::Kind::kAtom: {
        const auto p = static_cast<StateId>(symbols_.size() + 1);
        symbols_.push_back(r.symbol);
        follow_.emplace_back();
        return Info{false, {p}, {p}};
      }
      case Regex::Kind::kEpsilon:
        return Info{true, {}, {}};
      case Regex::Kind::kConcat: {
        Info acc = visit(r.children.front());
        for (std::size_t i = 1; i < r.children.size(); ++i) {
          Info next = visit(r.children[i]);
          link(acc.last, next.first);
          if (acc.nullable) acc.first.insert(next.first.begin(), next.first.end());
          if (next.nullable) {
            next.last.insert(acc.last.begin(), acc.last.end());
          }
          acc.last = std::move(next.last);
          acc.nullable = acc.nullable && next.nullable;
        }
        return acc;
      }
      case Regex::Kind::kAlt: {
        Info acc;
        for (const Regex& c : r.children) {
          Info next = visit(c);
          acc.nullable = acc.nullable || next.nullable;
          acc.first.insert(next.first.begin(), next.first.end());
          acc.last.insert(next.last.begin(), next.last.end());
        }
        return acc;
      }
      case Regex::Kind::kStar:
      case Regex::Kind::kPlus: {
        Info inner = visit(r.children.front());
        link(inner.last, inner.first);
        if (r.kind == Regex::Kind::kStar) inner.nullable = true;
        return inner;
      }
      case Regex::Kind::kOptional: {
        Info inner = visit(r.children.front());
        inner.nullable = true;
        return inner;
      }
    }
    return {};
  }

  Nfa build(const Regex& r) {
    const Info root = visit(r);
    std::vector<Transition> transitions;
    for (StateId p : root.first) transitions.push_back({0, symbols_[p - 1], p});
    for (std::size_t q = 0; q < follow_.size(); ++q) {
      for (StateId p : follow_[q]) {
        transitions.push_back({static_cast<StateId>(q + 1), symbols_[p - 1], p});
      }
    }
    std::vector<StateId> finals(root.last.begin(), root.last.end());
    if (root.nullable) finals.push_back(0);
    return Nfa(symbols_.size() + 1, 0, std::move(finals), std::move(transitions));
  }

 private:
  void link(const std::set<StateId>& from, const std::set<StateId>& to) {
    for (StateId q : from) follow_[q - 1].insert(to.begin(), to.end());
  }

  std::vector<Symbol> symbols_;              // position p -> symbols_[p - 1]
  std::vector<std::set<StateId>> follow_;    // position p -> follow_[p - 1]
};

}  // namespace detail

// Position automaton: one state per atom occurrence plus the initial state 0.
// No transition enters state 0.
inline Nfa glushkov(const Regex& r) { return detail::GlushkovBuilder().build(r); }

// True iff every word has at most one accepting run. Builds the synchronized
// self-product from (q0, q0) and looks for a reachable pair (p, q), p != q,
// from which some common suffix leads both components to final states.
inline bool is_unambiguous(const Nfa& nfa) {
  if (nfa.is_deterministic() || nfa.ambiguity() == Ambiguity::kUnambiguous) return true;
  if (nfa.ambiguity() == Ambiguity::kAmbiguous) return false;

  const std::size_t n = nfa.num_states();
  auto key = [n](StateId p, StateId q) { return static_cast<std::size_t>(p) * n + q; };

  std::vector<char> reached(n * n, 0);
  std::vector<std::vector<std::size_t>> reverse(n * n);
  std::deque<std::pair<StateId, StateId>> queue;
  reached[key(nfa.initial(), nfa.initial())] = 1;
  queue.emplace_back(nfa.initial(), nfa.initial());
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (const Transition& a : nfa.out(p)) {
      for (const Transition& b : nfa.out(q)) {
        if (a.symbol != b.symbol) continue;
        const std::size_t k = key(a.to, b.to);
        reverse[k].push_back(key(p, q));
        if (!reached[k]) {
          reached[k] = 1;
          queue.emplace_back(a.to, b.to);
        }
      }
    }
  }

  std::vector<char> coaccepting(n * n, 0);
  std::deque<std::size_t> back;
  for (StateId f : nfa.finals()) {
    for (StateId g : nfa.finals()) {
      if (reached[key(f, g)]) {
        coaccepting[key(f, g)] = 1;
        back.push_back(key(f, g));
      }
    }
  }
  while (!back.empty()) {
    const std::size_t k = back.front();
    back.pop_front();
    for (std::size_t pred : reverse[k]) {
      if (!coaccepting[pred]) {
        coaccepting[pred] = 1;
        back.push_back(pred);
      }
    }
  }
  for (StateId p = 0; p < n; ++p) {
    for (StateId q = 0; q < n; ++q) {
      if (p != q && coaccepting[key(p, q)]) return false;
    }
  }
  return true;
}

inline constexpr std::size_t kDefaultDeterminizeCeiling = 4096;

// Subset construction restricted to reachable subsets.
inline Nfa determinize(const Nfa& nfa, std::size_t ceiling = kDefaultDeterminizeCeiling) {
  using Subset = std::vector<StateId>;
  std::map<Subset, StateId> ids;
  std::vector<Subset> subsets;
  std::vector<Transition> transitions;
  std::vector<StateId> finals;

  auto intern = [&](Subset s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<StateId>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= ceiling) throw AutomatonBlowUp(ceiling);
      subsets.push_back(std::move(s));
    }
    return it->second;
  };

  intern(Subset{nfa.initial()});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::map<Symbol, std::set<StateId>> moves;
    bool final = false;
    for (StateId q : subsets[i]) {
      final = final || nfa.is_final(q);
      for (const Transition& t : nfa.out(q)) moves[t.symbol].insert(t.to);
    }
    if (final) finals.push_back(static_cast<StateId>(i));
    for (auto& [symbol, targets] : moves) {
      const StateId to = intern(Subset(targets.begin(), targets.end()));
      transitions.push_back({static_cast<StateId>(i), symbol, to});
    }
  }
  return Nfa(subsets.size(), 0, std::move(finals), std::move(transitions),
             nfa.accepts_epsilon_flag(), Ambiguity::kUnambiguous);
}

// Language-equivalent automaton with exactly one final state f*, which has
// no outgoing transitions. Every transition into an original final state is
// copied to f*; acceptance of the empty word moves to the accepts_epsilon
// flag. Returns the input unchanged when it already has a single final state
// other than the initial one.
inline Nfa single_final(const Nfa& nfa) {
  if (nfa.finals().size() == 1 && nfa.finals().front() != nfa.initial()) return nfa;
  if (nfa.finals().empty()) return nfa;

  const auto star = static_cast<StateId>(nfa.num_states());
  std::vector<Transition> transitions = nfa.transitions();
  for (const Transition& t : nfa.transitions()) {
    if (nfa.is_final(t.to)) transitions.push_back({t.from, t.symbol, star});
  }
  return Nfa(nfa.num_states() + 1, nfa.initial(), {star}, std::move(transitions),
             nfa.accepts_empty(), nfa.ambiguity());
}

// One-state automaton accepting every word over forward `labels`.
inline Nfa universal_automaton(const std::vector<std::string>& labels) {
  std::vector<Transition> transitions;
  for (const std::string& l : labels) transitions.push_back({0, Symbol{l}, 0});
  return Nfa(1, 0, {0}, std::move(transitions));
}

}  // namespace rpq
