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

// Brute-force reference for small instances. Enumerates paths directly over
// the base graph (no product graph, no index) and checks label words by
// simulating the automaton on state sets.

#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "rpq/graph.hpp"
#include "rpq/nfa.hpp"
#include "rpq/path.hpp"
#include "rpq/restricted_engine.hpp"

namespace rpq {

class OracleGuardError : public Error {
 public:
  using Error::Error;
};

struct OracleResult {
  std::set<Path> paths;
  std::map<NodeId, std::size_t> shortest;  // per endpoint

  std::set<NodeId> nodes() const {
    std::set<NodeId> out;
    for (const auto& [n, len] : shortest) out.insert(n);
    return out;
  }

  std::set<Path> shortest_paths() const {
    std::set<Path> out;
    for (const Path& p : paths) {
      if (p.length() == shortest.at(p.last())) out.insert(p);
    }
    return out;
  }

  std::set<Path> paths_to(NodeId node) const {
    std::set<Path> out;
    for (const Path& p : paths) {
      if (p.last() == node) out.insert(p);
    }
    return out;
  }
};

// Upper bound on the prefixes one enumeration may visit.
inline constexpr std::size_t kOracleBudget = 2'000'000;

namespace detail {

using StateSet = std::vector<char>;

inline StateSet nfa_step(const Nfa& nfa, const StateSet& from, const std::string& label,
                         Direction direction) {
  StateSet to(nfa.num_states(), 0);
  for (StateId q = 0; q < nfa.num_states(); ++q) {
    if (!from[q]) continue;
    for (const Transition& t : nfa.out(q)) {
      if (t.symbol.direction == direction && t.symbol.label == label) to[t.to] = 1;
    }
  }
  return to;
}

inline bool any_state(const StateSet& s) {
  for (char c : s) {
    if (c) return true;
  }
  return false;
}

inline bool has_final(const Nfa& nfa, const StateSet& s) {
  for (StateId f : nfa.finals()) {
    if (s[f]) return true;
  }
  return false;
}

// Every step available from `node`: forward along outgoing edges, inverse
// along incoming ones.
inline std::vector<std::pair<Step, NodeId>> base_steps(const GraphDB& g, NodeId node) {
  std::vector<std::pair<Step, NodeId>> out;
  for (const Edge& e : g.edges()) {
    if (e.from == node) out.push_back({Step{e.id, Direction::kForward}, e.to});
  }
  for (const Edge& e : g.edges()) {
    if (e.to == node) out.push_back({Step{e.id, Direction::kInverse}, e.from});
  }
  return out;
}

// Direct check of a whole path against a restrictor.
inline bool satisfies(const Path& p, Restrictor r) {
  switch (r) {
    case Restrictor::kWalk:
      return true;
    case Restrictor::kTrail: {
      std::set<EdgeId> seen;
      for (const Step& s : p.steps) {
        if (!seen.insert(s.edge).second) return false;
      }
      return true;
    }
    case Restrictor::kAcyclic: {
      std::set<NodeId> seen(p.nodes.begin(), p.nodes.end());
      return seen.size() == p.nodes.size();
    }
    case Restrictor::kSimple: {
      // Distinct nodes, except that the last may equal the first.
      const std::size_t inner = p.nodes.size() > 1 && p.last() == p.first()
                                    ? p.nodes.size() - 1
                                    : p.nodes.size();
      std::set<NodeId> seen(p.nodes.begin(), p.nodes.begin() + inner);
      return seen.size() == inner;
    }
  }
  return false;
}

struct OracleWalker {
  const GraphDB& g;
  const Nfa& nfa;
  Restrictor restrictor;
  std::size_t max_len;
  OracleResult result;
  Path path;
  std::size_t budget = kOracleBudget;

  void visit(const StateSet& states) {
    if (budget-- == 0) throw OracleGuardError("oracle guard: more than " +
                                              std::to_string(kOracleBudget) + " prefixes");
    if (has_final(nfa, states) || (path.length() == 0 && nfa.accepts_empty())) {
      result.paths.insert(path);
      auto [it, fresh] = result.shortest.try_emplace(path.last(), path.length());
      if (!fresh && path.length() < it->second) it->second = path.length();
    }
    if (restrictor == Restrictor::kWalk && path.length() == max_len) return;
    for (const auto& [step, to] : base_steps(g, path.last())) {
      const Edge& e = g.edge(step.edge);
      StateSet next = nfa_step(nfa, states, g.label_name(e.label), step.direction);
      if (!any_state(next)) continue;
      path.steps.push_back(step);
      path.nodes.push_back(to);
      if (satisfies(path, restrictor)) visit(next);
      path.steps.pop_back();
      path.nodes.pop_back();
    }
  }
};

}  // namespace detail

// All paths from `start` whose label word the automaton accepts: walks of
// length at most `max_len` for WALK, otherwise every path admitted by the
// restrictor.
inline OracleResult oracle_enumerate(const GraphDB& g, const Nfa& nfa, NodeId start,
                                     Restrictor restrictor, std::size_t max_len = 0) {
  if (restrictor == Restrictor::kWalk) {
    if (g.num_nodes() * nfa.num_states() > 512 || max_len > 12) {
      throw OracleGuardError("oracle guard: WALK needs |V|*|Q| <= 512 and max_len <= 12");
    }
  } else if (g.num_edges() > 20) {
    throw OracleGuardError("oracle guard: restricted modes need |E| <= 20");
  }
  if (!g.has_node(start)) return {};
  detail::OracleWalker walker{g, nfa, restrictor, max_len, {}, {}, kOracleBudget};
  walker.path.nodes.push_back(start);
  detail::StateSet initial(nfa.num_states(), 0);
  initial[nfa.initial()] = 1;
  walker.visit(initial);
  return std::move(walker.result);
}

// Length of a shortest accepted walk from `start` to each node, by BFS over
// (node, automaton state set) pairs.
inline std::map<NodeId, std::size_t> oracle_shortest_distances(const GraphDB& g, const Nfa& nfa,
                                                               NodeId start) {
  std::map<NodeId, std::size_t> dist;
  if (!g.has_node(start)) return dist;
  detail::StateSet initial(nfa.num_states(), 0);
  initial[nfa.initial()] = 1;
  if (nfa.accepts_empty()) dist[start] = 0;

  std::set<std::pair<NodeId, detail::StateSet>> seen{{start, initial}};
  std::queue<std::tuple<NodeId, detail::StateSet, std::size_t>> queue;
  queue.emplace(start, initial, 0);
  while (!queue.empty()) {
    auto [node, states, d] = queue.front();
    queue.pop();
    for (const auto& [step, to] : detail::base_steps(g, node)) {
      const Edge& e = g.edge(step.edge);
      detail::StateSet next = detail::nfa_step(nfa, states, g.label_name(e.label), step.direction);
      if (!detail::any_state(next) || !seen.insert({to, next}).second) continue;
      if (detail::has_final(nfa, next)) dist.try_emplace(to, d + 1);
      queue.emplace(to, std::move(next), d + 1);
    }
  }
  return dist;
}

}  // namespace rpq
