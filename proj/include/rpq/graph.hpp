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

// Immutable edge-labeled multigraph and its line-oriented text format.
//
// Format, one statement per line:
//   # comment                  (a token starting with '#' ends the line)
//   node <id>                  declares a node, possibly isolated
//   <from> <label> <to>        edge with implicit id e0, e1, ... (file order)
//   <from> <label> <to> <id>   edge with explicit id
// A file uses either implicit or explicit edge ids, never both.

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rpq/types.hpp"

namespace rpq {

class GraphFormatError : public Error {
 public:
  GraphFormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Bidirectional string <-> dense id table.
class Interner {
 public:
  std::uint32_t intern(std::string_view name) {
    auto [it, inserted] = ids_.try_emplace(std::string(name),
                                           static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::optional<std::uint32_t> find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

struct Edge {
  EdgeId id;
  NodeId from;
  LabelId label;
  NodeId to;
};

class GraphDB {
 public:
  class Builder;

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_labels() const { return labels_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  const std::string& node_name(NodeId n) const { return nodes_.name(n); }
  const std::string& label_name(LabelId l) const { return labels_.name(l); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }

  std::optional<NodeId> find_node(std::string_view name) const { return nodes_.find(name); }
  std::optional<LabelId> find_label(std::string_view name) const { return labels_.find(name); }
  std::optional<EdgeId> find_edge(std::string_view name) const { return edge_ids_.find(name); }

  bool has_node(NodeId n) const { return n < nodes_.size(); }

 private:
  Interner nodes_;
  Interner labels_;
  Interner edge_ids_;
  std::vector<std::string> edge_names_;
  std::vector<Edge> edges_;
};

class GraphDB::Builder {
 public:
  NodeId add_node(std::string_view name) { return graph_.nodes_.intern(name); }

  // Returns the dense edge id. An empty `name` means "e<dense id>".
  EdgeId add_edge(std::string_view from, std::string_view label, std::string_view to,
                  std::string_view name = {}) {
    const auto id = static_cast<EdgeId>(graph_.edges_.size());
    std::string edge_name = name.empty() ? "e" + std::to_string(id) : std::string(name);
    if (graph_.edge_ids_.find(edge_name)) {
      throw Error("duplicate edge id '" + edge_name + "'");
    }
    graph_.edge_ids_.intern(edge_name);
    graph_.edge_names_.push_back(std::move(edge_name));
    const NodeId f = graph_.nodes_.intern(from);
    const LabelId l = graph_.labels_.intern(label);
    const NodeId t = graph_.nodes_.intern(to);
    graph_.edges_.push_back(Edge{id, f, l, t});
    return id;
  }

  GraphDB build() && { return std::move(graph_); }

 private:
  GraphDB graph_;
};

inline GraphDB load_graph(std::istream& in) {
  GraphDB::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  std::optional<bool> explicit_ids;
  std::unordered_map<std::string, std::size_t> seen_ids;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) {
      if (tok.front() == '#') break;
      parts.push_back(std::move(tok));
    }
    if (parts.empty()) continue;

    if (parts.size() == 2) {
      if (parts[0] != "node") {
        throw GraphFormatError(line_no, "expected 'node <id>' or an edge, got '" + line + "'");
      }
      builder.add_node(parts[1]);
      continue;
    }
    if (parts.size() != 3 && parts.size() != 4) {
      throw GraphFormatError(line_no, "expected 2 to 4 tokens, got " +
                                          std::to_string(parts.size()));
    }
    const bool has_id = parts.size() == 4;
    if (explicit_ids && *explicit_ids != has_id) {
      throw GraphFormatError(line_no, "explicit and implicit edge ids are mixed");
    }
    explicit_ids = has_id;
    if (has_id) {
      auto [it, inserted] = seen_ids.try_emplace(parts[3], line_no);
      if (!inserted) {
        throw GraphFormatError(line_no, "duplicate edge id '" + parts[3] +
                                            "' (first used on line " +
                                            std::to_string(it->second) + ")");
      }
    }
    builder.add_edge(parts[0], parts[1], parts[2], has_id ? std::string_view(parts[3]) : "");
  }
  return std::move(builder).build();
}

inline GraphDB load_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

// Writes `g` in the text format with explicit edge ids. Nodes are declared
// first so that reloading reproduces the same dense node ids.
inline std::string render_graph(const GraphDB& g) {
  std::ostringstream out;
  for (NodeId n = 0; n < g.num_nodes(); ++n) out << "node " << g.node_name(n) << '\n';
  for (const Edge& e : g.edges()) {
    out << g.node_name(e.from) << ' ' << g.label_name(e.label) << ' ' << g.node_name(e.to)
        << ' ' << g.edge_name(e.id) << '\n';
  }
  return out.str();
}

}  // namespace rpq
