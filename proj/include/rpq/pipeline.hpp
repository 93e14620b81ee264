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

// Query model, planning and streaming execution.
//
// plan_query() validates the selector x restrictor combination, prepares the
// automaton the chosen engine needs, and fixes the traversal strategy.
// execute() pulls results one at a time from the engine and pushes them to a
// sink, stopping at the result limit, the timeout, or when the sink declines.

#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rpq/restricted_engine.hpp"
#include "rpq/walk_engine.hpp"

namespace rpq {

enum class Selector { kAny, kAnyShortest, kAll, kAllShortest };
enum class StrategyChoice { kAuto, kBfs, kDfs };

inline const char* to_string(Selector s) {
  switch (s) {
    case Selector::kAny: return "any";
    case Selector::kAnyShortest: return "any-shortest";
    case Selector::kAll: return "all";
    case Selector::kAllShortest: return "all-shortest";
  }
  return "?";
}

struct QuerySpec {
  std::string start;
  std::string regex;
  std::optional<std::string> end;
  Selector selector = Selector::kAnyShortest;
  Restrictor restrictor = Restrictor::kWalk;
  StrategyChoice strategy = StrategyChoice::kAuto;
  std::optional<std::uint64_t> limit;
  std::optional<std::chrono::milliseconds> timeout;
  std::size_t determinize_ceiling = kDefaultDeterminizeCeiling;
};

class PlanError : public Error {
 public:
  enum class Kind { kInfiniteResult, kStrategy, kAmbiguity, kSyntax };

  PlanError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class EngineKind { kAnyWalk, kAllShortestWalk, kAllRestricted, kAnyRestricted };

struct ExecutablePlan {
  EngineKind engine;
  Nfa nfa;
  Strategy strategy;
  Selector selector;
  Restrictor restrictor;
  std::string start;
  std::optional<std::string> end;
  std::optional<std::uint64_t> limit;
  std::optional<std::chrono::milliseconds> timeout;
  bool determinized = false;
  std::vector<std::string> warnings;
};

inline ExecutablePlan plan_query(const GraphDB& g, const QuerySpec& spec) {
  const bool shortest =
      spec.selector == Selector::kAnyShortest || spec.selector == Selector::kAllShortest;
  const bool walk = spec.restrictor == Restrictor::kWalk;

  if (spec.selector == Selector::kAll && walk) {
    throw PlanError(PlanError::Kind::kInfiniteResult,
                    "ALL WALK has an infinite result set; use a selector or a restrictor");
  }
  if (shortest && spec.strategy == StrategyChoice::kDfs) {
    throw PlanError(PlanError::Kind::kStrategy,
                    std::string(to_string(spec.selector)) + " requires bfs, got dfs");
  }
  if (spec.selector == Selector::kAllShortest && walk && spec.strategy == StrategyChoice::kDfs) {
    throw PlanError(PlanError::Kind::kStrategy, "all-shortest walk requires bfs");
  }

  Regex ast;
  try {
    ast = parse_regex(spec.regex);
  } catch (const RegexSyntaxError& e) {
    throw PlanError(PlanError::Kind::kSyntax, "regex '" + spec.regex + "': " + e.what());
  }

  ExecutablePlan plan{.engine = EngineKind::kAnyWalk,
                      .nfa = glushkov(ast),
                      .strategy = Strategy::kBfs,
                      .selector = spec.selector,
                      .restrictor = spec.restrictor,
                      .start = spec.start,
                      .end = spec.end,
                      .limit = spec.limit,
                      .timeout = spec.timeout,
                      .determinized = false,
                      .warnings = {}};

  for (const Symbol& s : plan.nfa.alphabet()) {
    if (!g.find_label(s.label)) {
      plan.warnings.push_back("label '" + s.label + "' does not occur in the graph");
    }
  }

  auto make_unambiguous = [&] {
    if (is_unambiguous(plan.nfa)) return;
    try {
      plan.nfa = determinize(plan.nfa, spec.determinize_ceiling);
      plan.determinized = true;
    } catch (const AutomatonBlowUp& e) {
      throw PlanError(PlanError::Kind::kAmbiguity,
                      "cannot ensure unambiguity for '" + spec.regex + "': " + e.what());
    }
  };

  const bool any = spec.selector == Selector::kAny || spec.selector == Selector::kAnyShortest;
  if (walk) {
    if (any) {
      plan.engine = EngineKind::kAnyWalk;
      plan.strategy = spec.strategy == StrategyChoice::kDfs ? Strategy::kDfs : Strategy::kBfs;
    } else {
      plan.engine = EngineKind::kAllShortestWalk;
      make_unambiguous();
      plan.nfa = single_final(plan.nfa);
    }
  } else {
    if (any) {
      plan.engine = EngineKind::kAnyRestricted;
    } else {
      plan.engine = EngineKind::kAllRestricted;
      make_unambiguous();
    }
    switch (spec.strategy) {
      case StrategyChoice::kAuto:
        plan.strategy = shortest ? Strategy::kBfs : Strategy::kDfs;
        break;
      case StrategyChoice::kBfs: plan.strategy = Strategy::kBfs; break;
      case StrategyChoice::kDfs: plan.strategy = Strategy::kDfs; break;
    }
  }
  return plan;
}

// One streamed result.
struct ResultRecord {
  std::uint64_t seq;
  NodeId node;
  Path path;
};

enum class Termination { kExhausted, kLimit, kTimeout, kAborted };

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::kExhausted: return "exhausted";
    case Termination::kLimit: return "limit";
    case Termination::kTimeout: return "timeout";
    case Termination::kAborted: return "aborted";
  }
  return "?";
}

struct ExecutionReport {
  std::uint64_t results = 0;
  std::uint64_t states_visited = 0;
  std::uint64_t pops = 0;
  std::uint64_t arena_bytes = 0;
  Clock::duration elapsed{};
  Termination termination = Termination::kExhausted;
  std::string error;  // set when the sink threw
};

// Pull interface over whichever engine a plan selects.
class QueryCursor {
 public:
  QueryCursor(const EdgeIndex& index, const ExecutablePlan& plan, Deadline deadline = {})
      : search_(make(index, plan, deadline)) {}

  std::optional<Answer> next() {
    return std::visit([](auto& s) { return s.next(); }, search_);
  }

  SearchStats stats() {
    return std::visit([](auto& s) { return s.stats(); }, search_);
  }

  bool timed_out() const {
    return std::visit([](const auto& s) { return s.timed_out(); }, search_);
  }

 private:
  using Search = std::variant<AnyWalkSearch, AllShortestWalkSearch, RestrictedSearch>;

  static Search make(const EdgeIndex& index, const ExecutablePlan& plan, Deadline deadline) {
    const std::optional<NodeId> start = index.graph().find_node(plan.start);
    const bool shortest = plan.selector == Selector::kAnyShortest ||
                          plan.selector == Selector::kAllShortest;
    switch (plan.engine) {
      case EngineKind::kAnyWalk:
        return AnyWalkSearch(index, plan.nfa, start, plan.strategy, deadline);
      case EngineKind::kAllShortestWalk: {
        AllShortestWalkSearch search(index, plan.nfa, start, deadline);
        if (plan.end) search.only_answers_at(index.graph().find_node(*plan.end).value_or(kNone));
        return Search(std::move(search));
      }
      case EngineKind::kAllRestricted:
        return all_restricted(index, plan.nfa, start, plan.restrictor, shortest, plan.strategy,
                              deadline);
      case EngineKind::kAnyRestricted:
        return any_restricted(index, plan.nfa, start, plan.restrictor, shortest, plan.strategy,
                              deadline);
    }
    throw Error("unknown engine");
  }

  Search search_;
};

// Receives each record; returning false stops the execution.
using ResultSink = std::function<bool(const ResultRecord&)>;

namespace detail {

inline std::optional<Clock::time_point> deadline_for(
    const std::optional<std::chrono::milliseconds>& timeout, Clock::time_point now) {
  if (!timeout) return std::nullopt;
  return now + *timeout;
}

// Drives any cursor whose next() yields something with a `node` member. The
// fixed end node is applied here as a post-filter; the all-shortest engines
// additionally skip enumerating groups for other nodes.
template <typename Cursor, typename Emit>
ExecutionReport drive(Cursor& cursor, const EdgeIndex& index, const ExecutablePlan& plan,
                      Clock::time_point began, Emit&& emit) {
  ExecutionReport report;
  std::optional<NodeId> end;
  bool end_missing = false;
  if (plan.end) {
    end = index.graph().find_node(*plan.end);
    end_missing = !end;
  }
  for (;;) {
    if (plan.limit && report.results >= *plan.limit) {
      report.termination = Termination::kLimit;
      break;
    }
    auto item = cursor.next();
    if (!item) {
      report.termination = cursor.timed_out() ? Termination::kTimeout : Termination::kExhausted;
      break;
    }
    if (end_missing || (end && item->node != *end)) continue;
    bool keep_going = false;
    try {
      keep_going = emit(report.results, *item);
    } catch (const std::exception& e) {
      report.error = e.what();
    }
    if (report.error.empty()) ++report.results;
    if (!keep_going) {
      report.termination = Termination::kAborted;
      break;
    }
  }
  const SearchStats stats = cursor.stats();
  report.states_visited = stats.states;
  report.pops = stats.pops;
  report.arena_bytes = stats.arena_bytes;
  report.elapsed = Clock::now() - began;
  return report;
}

}  // namespace detail

inline ExecutionReport execute(const EdgeIndex& index, const ExecutablePlan& plan,
                               const ResultSink& sink) {
  const auto began = Clock::now();
  QueryCursor cursor(index, plan, Deadline(detail::deadline_for(plan.timeout, began)));
  return detail::drive(cursor, index, plan, began, [&](std::uint64_t seq, Answer& a) {
    return sink(ResultRecord{seq, a.node, std::move(a.path)});
  });
}

struct CountRecord {
  std::uint64_t seq;
  NodeId node;
  std::uint32_t length;
  BigCount count;
};

using CountSink = std::function<bool(const CountRecord&)>;

// Shortest-path counts per answer node for an ALL SHORTEST WALK plan.
inline ExecutionReport execute_count(const EdgeIndex& index, const ExecutablePlan& plan,
                                     const CountSink& sink) {
  if (plan.engine != EngineKind::kAllShortestWalk) {
    throw PlanError(PlanError::Kind::kStrategy, "counting requires an all-shortest walk plan");
  }
  const auto began = Clock::now();
  CountShortestSearch search(index, plan.nfa, index.graph().find_node(plan.start),
                             Deadline(detail::deadline_for(plan.timeout, began)));
  if (plan.end) search.only_answers_at(index.graph().find_node(*plan.end).value_or(kNone));
  return detail::drive(search, index, plan, began, [&](std::uint64_t seq, CountAnswer& a) {
    return sink(CountRecord{seq, a.node, a.length, std::move(a.count)});
  });
}

}  // namespace rpq
