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

// Output encodings for result records.
//
//   {"seq":0,"node":"Rome","len":3,"path":["John","e1","Joe","e2","John","e8","Rome"]}
//
// Edges appear by id, so a path that repeats nodes stays unambiguous. The
// traversal direction of a step is implied by the edge's endpoints.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "rpq/pipeline.hpp"

namespace rpq {

inline std::string to_ndjson(const GraphDB& g, const ResultRecord& r) {
  nlohmann::ordered_json path = nlohmann::ordered_json::array();
  path.push_back(g.node_name(r.path.nodes.front()));
  for (std::size_t i = 0; i < r.path.steps.size(); ++i) {
    path.push_back(g.edge_name(r.path.steps[i].edge));
    path.push_back(g.node_name(r.path.nodes[i + 1]));
  }
  nlohmann::ordered_json j;
  j["seq"] = r.seq;
  j["node"] = g.node_name(r.node);
  j["len"] = r.path.length();
  j["path"] = std::move(path);
  return j.dump();
}

inline std::string to_ndjson(const GraphDB& g, const CountRecord& r) {
  nlohmann::ordered_json j;
  j["seq"] = r.seq;
  j["node"] = g.node_name(r.node);
  j["len"] = r.length;
  j["count"] = r.count.str();  // may exceed 64 bits
  return j.dump();
}

inline std::string to_text(const GraphDB& g, const ResultRecord& r) {
  return render_text(g, r.path);
}

inline std::string to_text(const GraphDB& g, const CountRecord& r) {
  return g.node_name(r.node) + " len=" + std::to_string(r.length) + " count=" + r.count.str();
}

// Inverse of to_ndjson(ResultRecord). Throws Error on malformed input or on
// names the graph does not contain.
inline ResultRecord parse_ndjson(const GraphDB& g, std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed record: ") + e.what());
  }
  auto node = [&](const nlohmann::json& v) {
    const auto id = g.find_node(v.get<std::string>());
    if (!id) throw Error("unknown node '" + v.get<std::string>() + "'");
    return *id;
  };
  try {
    ResultRecord r{j.at("seq").get<std::uint64_t>(), node(j.at("node")), {}};
    const auto& path = j.at("path");
    if (path.empty() || path.size() % 2 == 0) throw Error("path must have odd length");
    r.path.nodes.push_back(node(path[0]));
    for (std::size_t i = 1; i < path.size(); i += 2) {
      const std::string name = path[i].get<std::string>();
      const auto edge = g.find_edge(name);
      if (!edge) throw Error("unknown edge '" + name + "'");
      const NodeId from = r.path.nodes.back();
      const NodeId to = node(path[i + 1]);
      const Edge& e = g.edge(*edge);
      Direction d;
      if (e.from == from && e.to == to) {
        d = Direction::kForward;
      } else if (e.to == from && e.from == to) {
        d = Direction::kInverse;
      } else {
        throw Error("edge '" + name + "' does not connect its neighbors in the path");
      }
      r.path.steps.push_back(Step{*edge, d});
      r.path.nodes.push_back(to);
    }
    if (j.at("len").get<std::size_t>() != r.path.length()) throw Error("len disagrees with path");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed record: ") + e.what());
  }
}

}  // namespace rpq
