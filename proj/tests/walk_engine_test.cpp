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

#include <map>
#include <memory>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace rpq {
namespace {

using testing::make_path;

Nfa prepared(const std::string& regex) {
  Nfa nfa = glushkov(parse_regex(regex));
  if (!is_unambiguous(nfa)) nfa = determinize(nfa);
  return single_final(nfa);
}

std::vector<Answer> drain(AnyWalkSearch& s) {
  std::vector<Answer> out;
  while (auto a = s.next()) out.push_back(std::move(*a));
  return out;
}

TEST(AnyWalk, JohnKnowsPlusLives) {
  const GraphDB g = load_graph(testing::kSocial);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AnyWalkSearch search(index, glushkov(parse_regex("knows+/lives")), g.find_node("John"),
                       Strategy::kBfs);
  const auto answers = drain(search);
  ASSERT_EQ(answers.size(), 1u);
  EXPECT_EQ(g.node_name(answers[0].node), "Rome");
  EXPECT_EQ(answers[0].path, make_path(g, {"John", "e1", "Joe", "e2", "John", "e8", "Rome"}));
}

TEST(AnyWalk, ZeroLengthPathComesFirst) {
  const GraphDB g = load_graph(testing::kSocial);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AnyWalkSearch search(index, glushkov(parse_regex("knows*")), g.find_node("Joe"),
                       Strategy::kBfs);
  const auto answers = drain(search);
  ASSERT_FALSE(answers.empty());
  EXPECT_EQ(g.node_name(answers[0].node), "Joe");
  EXPECT_EQ(answers[0].path.length(), 0u);
  std::set<std::string> nodes;
  for (const Answer& a : answers) nodes.insert(g.node_name(a.node));
  EXPECT_EQ(nodes, (std::set<std::string>{"Joe", "John", "Paul", "Lily", "Anne", "Jane"}));
}

TEST(AnyWalk, MissingStartIsEmpty) {
  const GraphDB g = load_graph(testing::kSocial);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AnyWalkSearch none(index, glushkov(parse_regex("knows*")), std::nullopt, Strategy::kBfs);
  EXPECT_FALSE(none.next().has_value());
  AnyWalkSearch out_of_range(index, glushkov(parse_regex("knows*")), NodeId{999},
                             Strategy::kBfs);
  EXPECT_FALSE(out_of_range.next().has_value());
}

TEST(AnyWalk, InverseEdges) {
  const GraphDB g = load_graph(testing::kSocial);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AnyWalkSearch search(index, glushkov(parse_regex("works/^works")), g.find_node("Jane"),
                       Strategy::kBfs);
  const auto answers = drain(search);
  ASSERT_EQ(answers.size(), 2u);
  // Inverse neighbors of ENS come in node-id order: Anne before Jane.
  EXPECT_EQ(answers[0].path, make_path(g, {"Jane", "e10", "ENS", "e11", "Anne"}));
  EXPECT_EQ(answers[1].path, make_path(g, {"Jane", "e10", "ENS", "e10", "Jane"}));
  for (const Answer& a : answers) EXPECT_TRUE(is_well_formed(g, a.path));
}

TEST(AllShortestWalk, JoeToEns) {
  const GraphDB g = load_graph(testing::kSocial);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AllShortestWalkSearch search(index, prepared("knows*/works"), g.find_node("Joe"));
  const auto groups = collect_groups(search);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(g.node_name(groups[0].first), "ENS");
  const std::vector<Path> expected{
      make_path(g, {"Joe", "e3", "Paul", "e5", "Anne", "e11", "ENS"}),
      make_path(g, {"Joe", "e3", "Paul", "e6", "Jane", "e10", "ENS"}),
      make_path(g, {"Joe", "e4", "Lily", "e7", "Jane", "e10", "ENS"})};
  EXPECT_EQ(groups[0].second, expected);
}

TEST(AllShortestWalk, DiamondTwo) {
  const GraphDB g = gen_diamond(2);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AllShortestWalkSearch search(index, prepared("a*"), g.find_node("start"));
  std::map<std::string, std::vector<Path>> by_node;
  std::size_t last_len = 0;
  for (auto& [node, paths] : collect_groups(search)) {
    ASSERT_FALSE(by_node.contains(g.node_name(node))) << "group split";
    EXPECT_GE(paths.front().length(), last_len);
    last_len = paths.front().length();
    by_node[g.node_name(node)] = paths;
  }
  ASSERT_EQ(by_node.size(), g.num_nodes());
  EXPECT_EQ(by_node["end"].size(), 4u);
  for (const Path& p : by_node["end"]) EXPECT_EQ(p.length(), 4u);
  EXPECT_EQ(by_node["w2"].size(), 2u);
  EXPECT_EQ(by_node["start"].size(), 1u);
  EXPECT_EQ(by_node["start"][0].length(), 0u);
}

TEST(AllShortestWalk, SingleEdge) {
  const GraphDB g = load_graph("v a w\n");
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AllShortestWalkSearch search(index, prepared("a"), g.find_node("v"));
  const auto groups = collect_groups(search);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(g.node_name(groups[0].first), "w");
  EXPECT_EQ(groups[0].second.size(), 1u);
}

TEST(GetAllPaths, FanInDag) {
  const GraphDB g = load_graph(testing::kFanIn);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  AllShortestWalkSearch search(index, prepared("a*"), g.find_node("v"));
  collect_groups(search);
  const ShortestDag& dag = search.dag();

  std::map<std::string, std::uint32_t> state_of;
  for (std::uint32_t i = 0; i < dag.states.size(); ++i) {
    if (dag.states[i].state == prepared("a*").finals().front() || dag.states[i].depth == 0) {
      state_of[g.node_name(dag.states[i].node)] = i;
    }
  }
  auto paths_of = [&](const std::string& node) {
    std::vector<Path> out;
    ShortestPathEnumerator e = get_all_paths(dag, state_of.at(node));
    for (Path p; e.next(p);) out.push_back(p);
    return out;
  };

  const std::vector<Path> n4 = paths_of("n4");
  const std::vector<Path> expected4{make_path(g, {"v", "e0", "n1", "e3", "n4"}),
                                    make_path(g, {"v", "e1", "n2", "e4", "n4"}),
                                    make_path(g, {"v", "e2", "n3", "e5", "n4"})};
  EXPECT_EQ(n4, expected4);

  const std::vector<Path> n5 = paths_of("n5");
  ASSERT_EQ(n5.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    Path extended = n4[i];
    extended.steps.push_back(Step{*g.find_edge("e6"), Direction::kForward});
    extended.nodes.push_back(*g.find_node("n5"));
    EXPECT_EQ(n5[i], extended);
  }

  const std::vector<Path> at_start = paths_of("v");
  ASSERT_EQ(at_start.size(), 1u);
  EXPECT_EQ(at_start[0].length(), 0u);
}

TEST(GetAllPaths, DeepChainIsIterative) {
  const GraphDB g = gen_diamond(150);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  QuerySpec spec = testing::query("start", "a*", Selector::kAllShortest, Restrictor::kWalk);
  spec.end = "end";
  spec.limit = 10;
  const auto result = testing::run(g, spec);
  ASSERT_EQ(result.records.size(), 10u);
  for (const auto& r : result.records) EXPECT_EQ(r.path.length(), 300u);
  EXPECT_EQ(result.path_set().size(), 10u);
}

TEST(CountShortest, Examples) {
  for (int n : {1, 2, 5, 10}) {
    const GraphDB g = gen_diamond(n);
    const EdgeIndex index(g, IndexMode::kCsrCache);
    CountShortestSearch search(index, prepared("a*"), g.find_node("start"));
    std::optional<BigCount> at_end;
    while (auto c = search.next()) {
      if (g.node_name(c->node) == "end") at_end = c->count;
    }
    ASSERT_TRUE(at_end.has_value());
    EXPECT_EQ(*at_end, BigCount(1) << n);
  }
  const GraphDB fan = load_graph(testing::kFanIn);
  const EdgeIndex fan_index(fan, IndexMode::kCsrCache);
  CountShortestSearch fan_search(fan_index, prepared("a*"), fan.find_node("v"));
  std::map<std::string, BigCount> counts;
  while (auto c = fan_search.next()) counts[fan.node_name(c->node)] = c->count;
  EXPECT_EQ(counts.at("n4"), 3);
  EXPECT_EQ(counts.at("n5"), 3);
  EXPECT_EQ(counts.at("v"), 1);

  const GraphDB edge = load_graph("v a w\n");
  const EdgeIndex edge_index(edge, IndexMode::kCsrCache);
  CountShortestSearch single(edge_index, prepared("a"), edge.find_node("v"));
  auto c = single.next();
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->count, 1);
  EXPECT_FALSE(single.next().has_value());
}

TEST(CountShortest, HundredDiamonds) {
  const GraphDB g = gen_diamond(100);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  CountShortestSearch search(index, prepared("a*"), g.find_node("start"));
  std::optional<CountAnswer> at_end;
  while (auto c = search.next()) {
    if (g.node_name(c->node) == "end") at_end = *c;
  }
  ASSERT_TRUE(at_end.has_value());
  EXPECT_EQ(at_end->length, 200u);
  EXPECT_EQ(at_end->count.str(), "1267650600228229401496703205376");
}

TEST(Unlabeled, FanIn) {
  const GraphDB g = load_graph(testing::kFanIn);
  const EdgeIndex index(g, IndexMode::kCsrCache);
  auto search = enumerate_all_shortest_unlabeled(index, g.find_node("v"));
  std::map<std::string, std::vector<Path>> by_node;
  for (auto& [node, paths] : collect_groups(search)) by_node[g.node_name(node)] = paths;
  ASSERT_EQ(by_node.size(), 6u);
  EXPECT_EQ(by_node["n4"].size(), 3u);
  EXPECT_EQ(by_node["n5"].size(), 3u);
  for (const Path& p : by_node["n4"]) EXPECT_EQ(p.length(), 2u);
  for (const Path& p : by_node["n5"]) EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(std::set<Path>(by_node["n5"].begin(), by_node["n5"].end()).size(), 3u);
}

TEST(Unlabeled, IgnoresLabelsButNotDirection) {
  const GraphDB g = load_graph("v a x\nx b y\nz c v\n");
  const EdgeIndex index(g, IndexMode::kCsrCache);
  auto search = enumerate_all_shortest_unlabeled(index, g.find_node("v"));
  std::set<std::string> nodes;
  for (auto& [node, paths] : collect_groups(search)) nodes.insert(g.node_name(node));
  EXPECT_EQ(nodes, (std::set<std::string>{"v", "x", "y"}));
}

TEST(Unlabeled, SinkStart) {
  const GraphDB g = load_graph("v a w\n");
  const EdgeIndex index(g, IndexMode::kCsrCache);
  auto search = enumerate_all_shortest_unlabeled(index, g.find_node("w"));
  const auto groups = collect_groups(search);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(g.node_name(groups[0].first), "w");
  ASSERT_EQ(groups[0].second.size(), 1u);
  EXPECT_EQ(groups[0].second[0].length(), 0u);
}

TEST(Enumerator, StepsBoundedByOutput) {
  for (int n : {3, 8, 12}) {
    const GraphDB g = gen_diamond(n);
    const EdgeIndex index(g, IndexMode::kCsrCache);
    AllShortestWalkSearch search(index, prepared("a*"), g.find_node("start"));
    std::uint64_t output = 0;
    while (auto a = search.next()) output += a->path.length() + 1;
    EXPECT_LE(search.enumeration_steps(), 2 * output) << "n=" << n;
  }
}

// Random instances, every node as start: engines against the brute-force
// walk oracle.
class WalkOracle : public ::testing::Test {
 protected:
  struct Instance {
    std::shared_ptr<const GraphDB> g;
    std::string regex;
    Nfa raw;
    NodeId start;
    OracleResult oracle;
  };

  static const std::vector<Instance>& instances() {
    static const std::vector<Instance> cached = [] {
      std::mt19937 rng(31);
      std::vector<Instance> out;
      for (int i = 0; i < 150; ++i) {
        auto g =
            std::make_shared<const GraphDB>(testing::random_graph(rng, 8, 16, 1 + i % 3, 3, 8));
        const std::string regex = testing::random_regex(rng, 3);
        const Nfa raw = glushkov(parse_regex(regex));
        for (NodeId s = 0; s < g->num_nodes(); ++s) {
          auto oracle = testing::walk_oracle(*g, raw, s);
          if (oracle) out.push_back(Instance{g, regex, raw, s, std::move(*oracle)});
        }
      }
      return out;
    }();
    EXPECT_GT(cached.size(), 600u);
    return cached;
  }
};

TEST_F(WalkOracle, AnyWalkShortestPerNode) {
  for (const Instance& in : instances()) {
    const EdgeIndex index(*in.g, IndexMode::kCsrCache);
    AnyWalkSearch search(index, in.raw, in.start, Strategy::kBfs);
    std::set<NodeId> seen;
    while (auto a = search.next()) {
      EXPECT_TRUE(seen.insert(a->node).second) << in.regex << ": node repeated";
      EXPECT_EQ(a->path.length(), in.oracle.shortest.at(a->node)) << in.regex;
      EXPECT_TRUE(is_well_formed(*in.g, a->path));
      EXPECT_TRUE(in.raw.accepts(label_word(*in.g, a->path))) << in.regex;
      EXPECT_EQ(a->path.first(), in.start);
    }
    EXPECT_EQ(seen, in.oracle.nodes()) << in.regex;
    EXPECT_LE(search.stats().pops, in.raw.num_states() * in.g->num_nodes());
  }
}

TEST_F(WalkOracle, AnyWalkDepthFirstReachesSameNodes) {
  for (const Instance& in : instances()) {
    const EdgeIndex index(*in.g, IndexMode::kScan);
    AnyWalkSearch search(index, in.raw, in.start, Strategy::kDfs);
    std::set<NodeId> seen;
    while (auto a = search.next()) {
      EXPECT_TRUE(seen.insert(a->node).second);
      EXPECT_TRUE(in.raw.accepts(label_word(*in.g, a->path))) << in.regex;
    }
    EXPECT_EQ(seen, in.oracle.nodes()) << in.regex;
  }
}

TEST_F(WalkOracle, AllShortestMatchesOracle) {
  for (const Instance& in : instances()) {
    const EdgeIndex index(*in.g, IndexMode::kCsrCache);
    const Nfa nfa = prepared(in.regex);
    AllShortestWalkSearch search(index, nfa, in.start);
    std::set<Path> got;
    std::size_t total = 0;
    while (auto a = search.next()) {
      ++total;
      got.insert(a->path);
      EXPECT_EQ(a->path.last(), a->node);
      EXPECT_TRUE(in.raw.accepts(label_word(*in.g, a->path))) << in.regex;
    }
    EXPECT_EQ(total, got.size()) << in.regex << ": duplicate path";
    EXPECT_EQ(got, in.oracle.shortest_paths()) << in.regex;
    EXPECT_LE(search.stats().pops, nfa.num_states() * in.g->num_nodes());

    const ShortestDag& dag = search.dag();
    for (std::uint32_t i = 0; i < dag.states.size(); ++i) {
      const auto& s = dag.states[i];
      if (s.depth == 0) {
        EXPECT_EQ(s.first_link, kNone);
        continue;
      }
      ASSERT_NE(s.first_link, kNone);
      for (std::uint32_t l = s.first_link; l != kNone; l = dag.links[l].next) {
        EXPECT_EQ(dag.states[dag.links[l].prev].depth + 1, s.depth);
      }
    }
  }
}

TEST_F(WalkOracle, CountsMatchEnumeration) {
  for (const Instance& in : instances()) {
    const EdgeIndex index(*in.g, IndexMode::kCsrCache);
    const Nfa nfa = prepared(in.regex);
    CountShortestSearch counter(index, nfa, in.start);
    std::map<NodeId, BigCount> counts;
    while (auto c = counter.next()) {
      EXPECT_FALSE(counts.contains(c->node));
      counts[c->node] = c->count;
      EXPECT_EQ(c->length, in.oracle.shortest.at(c->node));
    }
    std::map<NodeId, BigCount> expected;
    for (const Path& p : in.oracle.shortest_paths()) expected[p.last()] += 1;
    EXPECT_EQ(counts, expected) << in.regex;
  }
}

}  // namespace
}  // namespace rpq
