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

#include <string>

#include "rpq/graph.hpp"

namespace rpq {

// Chain of n diamonds with 2^n start -> end paths, each of length 2n:
//
//   start -> u1, v1;  ui, vi -> w(i+1);  w(i+1) -> u(i+1), v(i+1);  un, vn -> end
//
// All edges carry label `a`. 3n+1 nodes, 4n edges.
inline GraphDB gen_diamond(int n) {
  if (n < 1) throw Error("gen_diamond: n must be at least 1, got " + std::to_string(n));
  GraphDB::Builder b;
  auto name = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
  b.add_node("start");
  for (int i = 1; i <= n; ++i) b.add_node(name('u', i));
  for (int i = 1; i <= n; ++i) b.add_node(name('v', i));
  for (int i = 2; i <= n; ++i) b.add_node(name('w', i));
  b.add_node("end");

  b.add_edge("start", "a", "u1");
  b.add_edge("start", "a", "v1");
  for (int i = 1; i < n; ++i) {
    b.add_edge(name('u', i), "a", name('w', i + 1));
    b.add_edge(name('v', i), "a", name('w', i + 1));
    b.add_edge(name('w', i + 1), "a", name('u', i + 1));
    b.add_edge(name('w', i + 1), "a", name('v', i + 1));
  }
  b.add_edge(name('u', n), "a", "end");
  b.add_edge(name('v', n), "a", "end");
  return std::move(b).build();
}

}  // namespace rpq
