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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rpq/graph.hpp"
#include "rpq/types.hpp"

namespace rpq {

// An edge together with the direction it was traversed in.
struct Step {
  EdgeId edge;
  Direction direction;

  auto operator<=>(const Step&) const = default;
};

// Alternating node/edge sequence n0 e1 n1 ... ek nk.
struct Path {
  std::vector<NodeId> nodes;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  NodeId first() const { return nodes.front(); }
  NodeId last() const { return nodes.back(); }

  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(steps.size());
    for (const Step& s : steps) out.push_back(s.edge);
    return out;
  }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

inline std::vector<Symbol> label_word(const GraphDB& g, const Path& p) {
  std::vector<Symbol> word;
  word.reserve(p.steps.size());
  for (const Step& s : p.steps) {
    word.push_back(Symbol{g.label_name(g.edge(s.edge).label), s.direction});
  }
  return word;
}

// Each step must connect consecutive nodes in its direction.
inline bool is_well_formed(const GraphDB& g, const Path& p) {
  if (p.nodes.size() != p.steps.size() + 1) return false;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Edge& e = g.edge(p.steps[i].edge);
    const bool fwd = p.steps[i].direction == Direction::kForward;
    const NodeId from = fwd ? e.from : e.to;
    const NodeId to = fwd ? e.to : e.from;
    if (from != p.nodes[i] || to != p.nodes[i + 1]) return false;
  }
  return true;
}

// `John -e1-> Joe <-e4- Lily`
inline std::string render_text(const GraphDB& g, const Path& p) {
  std::string out = g.node_name(p.nodes.front());
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const std::string& e = g.edge_name(p.steps[i].edge);
    out += p.steps[i].direction == Direction::kForward ? " -" + e + "-> " : " <-" + e + "- ";
    out += g.node_name(p.nodes[i + 1]);
  }
  return out;
}

}  // namespace rpq
