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

// rpq: run one regular path query over a graph file.
//
//   rpq --graph social.g --start John --regex "knows+/lives" --selector any-shortest
//   rpq gen-diamond 20 > diamond20.g
//
// Exit status: 0 ok, 1 usage, 2 plan error, 3 timeout, 4 I/O error,
// 5 malformed graph.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rpq/rpq.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kPlan = 2, kTimeout = 3, kIo = 4, kGraph = 5 };

struct Args {
  std::string graph;
  std::string start;
  std::string regex;
  std::optional<std::string> end;
  rpq::Selector selector = rpq::Selector::kAnyShortest;
  rpq::Restrictor restrictor = rpq::Restrictor::kWalk;
  rpq::StrategyChoice strategy = rpq::StrategyChoice::kAuto;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> timeout_ms;
  rpq::IndexMode index = rpq::IndexMode::kCsrCache;
  bool text = false;
  bool stats = false;
  bool count = false;
  int repeat = 1;
};

void print_stats(const rpq::GraphDB& g, const rpq::EdgeIndex& index,
                 const rpq::ExecutionReport& r, int run) {
  const double ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
  std::ostringstream line;
  line << "run=" << run << " nodes=" << g.num_nodes() << " edges=" << g.num_edges()
       << " states=" << r.states_visited << " pops=" << r.pops << " results=" << r.results
       << " elapsed_ms=" << ms << " termination=" << rpq::to_string(r.termination)
       << " index=" << rpq::to_string(index.mode()) << " csr_bytes=" << index.csr_bytes()
       << " arena_bytes=" << r.arena_bytes;
  std::cerr << line.str() << '\n';
}

int run_query(const Args& a) {
  std::ifstream in(a.graph);
  if (!in) {
    std::cerr << "error: cannot open graph file '" << a.graph << "'\n";
    return kIo;
  }
  std::optional<rpq::GraphDB> loaded;
  try {
    loaded.emplace(rpq::load_graph(in));
  } catch (const rpq::Error& e) {
    std::cerr << "error: " << a.graph << ": " << e.what() << '\n';
    return kGraph;
  }
  const rpq::GraphDB& g = *loaded;

  rpq::QuerySpec spec;
  spec.start = a.start;
  spec.regex = a.regex;
  spec.end = a.end;
  spec.selector = a.selector;
  spec.restrictor = a.restrictor;
  spec.strategy = a.strategy;
  spec.limit = a.limit;
  if (a.timeout_ms) spec.timeout = std::chrono::milliseconds(*a.timeout_ms);

  std::optional<rpq::ExecutablePlan> plan;
  try {
    plan.emplace(rpq::plan_query(g, spec));
    if (a.count && plan->engine != rpq::EngineKind::kAllShortestWalk) {
      throw rpq::PlanError(rpq::PlanError::Kind::kStrategy,
                           "--count needs --selector all-shortest --restrictor walk");
    }
  } catch (const rpq::PlanError& e) {
    std::cerr << "error: plan: " << e.what() << '\n';
    return kPlan;
  }
  for (const std::string& w : plan->warnings) std::cerr << "warning: " << w << '\n';
  if (!g.find_node(a.start)) {
    std::cerr << "warning: start node '" << a.start << "' does not occur in the graph\n";
  }
  if (a.end && !g.find_node(*a.end)) {
    std::cerr << "warning: end node '" << *a.end << "' does not occur in the graph\n";
  }

  const rpq::EdgeIndex index(g, a.index);
  rpq::ExecutionReport report;
  for (int run = 1; run <= a.repeat; ++run) {
    const bool print = run == 1;  // later runs only measure
    auto emit = [&](const std::string& line) {
      if (!print) return true;
      std::cout << line << '\n';
      return static_cast<bool>(std::cout);
    };
    if (a.count) {
      report = rpq::execute_count(index, *plan, [&](const rpq::CountRecord& r) {
        return emit(a.text ? rpq::to_text(g, r) : rpq::to_ndjson(g, r));
      });
    } else {
      report = rpq::execute(index, *plan, [&](const rpq::ResultRecord& r) {
        return emit(a.text ? rpq::to_text(g, r) : rpq::to_ndjson(g, r));
      });
    }
    std::cout.flush();
    if (a.stats) print_stats(g, index, report, run);
    if (report.termination == rpq::Termination::kAborted) break;
  }

  switch (report.termination) {
    case rpq::Termination::kExhausted:
    case rpq::Termination::kLimit:
      return kOk;
    case rpq::Termination::kTimeout:
      std::cerr << "error: query timed out after " << *a.timeout_ms << " ms\n";
      return kTimeout;
    case rpq::Termination::kAborted:
      std::cerr << "error: writing results failed"
                << (report.error.empty() ? "" : ": " + report.error) << '\n';
      return kIo;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular path queries over edge-labeled graphs"};
  app.require_subcommand(0, 1);
  Args a;

  const std::map<std::string, rpq::Selector> selectors{
      {"any", rpq::Selector::kAny},
      {"any-shortest", rpq::Selector::kAnyShortest},
      {"all", rpq::Selector::kAll},
      {"all-shortest", rpq::Selector::kAllShortest}};
  const std::map<std::string, rpq::Restrictor> restrictors{
      {"walk", rpq::Restrictor::kWalk},
      {"trail", rpq::Restrictor::kTrail},
      {"simple", rpq::Restrictor::kSimple},
      {"acyclic", rpq::Restrictor::kAcyclic}};
  const std::map<std::string, rpq::StrategyChoice> strategies{
      {"auto", rpq::StrategyChoice::kAuto},
      {"bfs", rpq::StrategyChoice::kBfs},
      {"dfs", rpq::StrategyChoice::kDfs}};
  const std::map<std::string, rpq::IndexMode> indexes{
      {"csr-cache", rpq::IndexMode::kCsrCache},
      {"csr-full", rpq::IndexMode::kCsrFull},
      {"scan", rpq::IndexMode::kScan}};
  const std::map<std::string, bool> outputs{{"ndjson", false}, {"text", true}};

  app.add_option("--graph", a.graph, "graph file");
  app.add_option("--start", a.start, "start node id");
  app.add_option("--regex", a.regex, "path regular expression");
  app.add_option("--end", a.end, "fixed end node id");
  app.add_option("--selector", a.selector, "any|any-shortest|all|all-shortest")
      ->transform(CLI::CheckedTransformer(selectors, CLI::ignore_case).description(""))
      ->type_name("SELECTOR");
  app.add_option("--restrictor", a.restrictor, "walk|trail|simple|acyclic")
      ->transform(CLI::CheckedTransformer(restrictors, CLI::ignore_case).description(""))
      ->type_name("RESTRICTOR");
  app.add_option("--strategy", a.strategy, "auto|bfs|dfs")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case).description(""))
      ->type_name("STRATEGY");
  app.add_option("--limit", a.limit, "maximum number of records");
  app.add_option("--timeout", a.timeout_ms, "timeout in milliseconds");
  app.add_option("--index", a.index, "csr-cache|csr-full|scan")
      ->transform(CLI::CheckedTransformer(indexes).description(""))
      ->type_name("INDEX");
  app.add_option("--output", a.text, "ndjson|text")
      ->transform(CLI::CheckedTransformer(outputs).description(""))
      ->type_name("FORMAT");
  app.add_flag("--stats", a.stats, "print a stats line to stderr");
  app.add_flag("--count", a.count, "print shortest-path counts instead of paths");
  app.add_option("--repeat", a.repeat, "rerun the query, printing results once")
      ->check(CLI::PositiveNumber);

  int diamond_n = 0;
  auto* gen = app.add_subcommand("gen-diamond", "write a diamond chain graph to stdout");
  gen->add_option("n", diamond_n, "number of diamonds")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (gen->parsed()) {
    try {
      std::cout << rpq::render_graph(rpq::gen_diamond(diamond_n));
    } catch (const rpq::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kUsage;
    }
    return std::cout ? kOk : kIo;
  }

  for (const auto& [flag, value] : {std::pair{"--graph", &a.graph}, std::pair{"--start", &a.start},
                                    std::pair{"--regex", &a.regex}}) {
    if (value->empty()) {
      std::cerr << "error: " << flag << " is required\n";
      return kUsage;
    }
  }
  return run_query(a);
}
