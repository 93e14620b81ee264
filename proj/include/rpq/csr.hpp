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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

#include "rpq/graph.hpp"

namespace rpq {

// A neighbor reached through one edge.
struct Adjacent {
  NodeId node;
  EdgeId edge;

  auto operator<=>(const Adjacent&) const = default;
};

// Per-(label, direction) compressed sparse row index.
//
// src holds the source nodes that have at least one matching edge, in
// increasing id order. The neighbors of src[i] are tgt[index[i], index[i+1]),
// sorted by (node, edge). index has |src| + 1 entries.
struct CsrIndex {
  LabelId label = kNone;
  Direction direction = Direction::kForward;
  std::vector<NodeId> src;
  std::vector<std::uint32_t> index{0};
  std::vector<Adjacent> tgt;

  std::span<const Adjacent> neighbors(NodeId node) const {
    auto it = std::lower_bound(src.begin(), src.end(), node);
    if (it == src.end() || *it != node) return {};
    const auto i = static_cast<std::size_t>(it - src.begin());
    return std::span<const Adjacent>(tgt).subspan(index[i], index[i + 1] - index[i]);
  }

  std::size_t bytes() const {
    return src.capacity() * sizeof(NodeId) + index.capacity() * sizeof(std::uint32_t) +
           tgt.capacity() * sizeof(Adjacent);
  }
};

inline CsrIndex build_csr(const GraphDB& g, LabelId label, Direction direction) {
  CsrIndex csr;
  csr.label = label;
  csr.direction = direction;
  if (label >= g.num_labels()) return csr;

  std::vector<std::tuple<NodeId, NodeId, EdgeId>> entries;
  for (const Edge& e : g.edges()) {
    if (e.label != label) continue;
    if (direction == Direction::kForward) {
      entries.emplace_back(e.from, e.to, e.id);
    } else {
      entries.emplace_back(e.to, e.from, e.id);
    }
  }
  std::sort(entries.begin(), entries.end());

  csr.tgt.reserve(entries.size());
  for (const auto& [source, neighbor, edge] : entries) {
    if (csr.src.empty() || csr.src.back() != source) {
      if (!csr.src.empty()) csr.index.push_back(static_cast<std::uint32_t>(csr.tgt.size()));
      csr.src.push_back(source);
    }
    csr.tgt.push_back(Adjacent{neighbor, edge});
  }
  if (!csr.src.empty()) csr.index.push_back(static_cast<std::uint32_t>(csr.tgt.size()));
  return csr;
}

enum class IndexMode {
  kCsrCache,  // build each (label, direction) CSR on first use, keep it
  kCsrFull,   // build every CSR up front
  kScan,      // no index; linear scan over the edge list
};

inline const char* to_string(IndexMode mode) {
  switch (mode) {
    case IndexMode::kCsrCache: return "csr-cache";
    case IndexMode::kCsrFull: return "csr-full";
    case IndexMode::kScan: return "scan";
  }
  return "?";
}

// Neighbor lookup over a GraphDB. Safe to share between threads: each CSR is
// built at most once and published through std::call_once.
class EdgeIndex {
 public:
  EdgeIndex(const GraphDB& g, IndexMode mode)
      : graph_(&g), mode_(mode), slots_(std::make_unique<Slot[]>(2 * g.num_labels())) {
    if (mode_ == IndexMode::kCsrFull) {
      for (LabelId l = 0; l < g.num_labels(); ++l) {
        csr(l, Direction::kForward);
        csr(l, Direction::kInverse);
      }
    }
  }

  const GraphDB& graph() const { return *graph_; }
  IndexMode mode() const { return mode_; }

  // Edges leaving `node` with `label` (forward) or entering it (inverse),
  // sorted by (neighbor, edge). In scan mode the result lives in `scratch`.
  std::span<const Adjacent> neighbors(NodeId node, LabelId label, Direction direction,
                                      std::vector<Adjacent>& scratch) const {
    if (label >= graph_->num_labels()) return {};
    if (mode_ == IndexMode::kScan) {
      scratch.clear();
      for (const Edge& e : graph_->edges()) {
        if (e.label != label) continue;
        if (direction == Direction::kForward && e.from == node) {
          scratch.push_back(Adjacent{e.to, e.id});
        } else if (direction == Direction::kInverse && e.to == node) {
          scratch.push_back(Adjacent{e.from, e.id});
        }
      }
      std::sort(scratch.begin(), scratch.end());
      return scratch;
    }
    return csr(label, direction).neighbors(node);
  }

  const CsrIndex& csr(LabelId label, Direction direction) const {
    Slot& slot = slots_[2 * label + static_cast<std::size_t>(direction)];
    std::call_once(slot.once, [&] {
      slot.index = build_csr(*graph_, label, direction);
      slot.built.store(true, std::memory_order_release);
    });
    return slot.index;
  }

  std::size_t csr_bytes() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < 2 * graph_->num_labels(); ++i) {
      if (slots_[i].built.load(std::memory_order_acquire)) total += slots_[i].index.bytes();
    }
    return total;
  }

  std::size_t built_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < 2 * graph_->num_labels(); ++i) {
      n += slots_[i].built.load(std::memory_order_acquire) ? 1 : 0;
    }
    return n;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::atomic<bool> built{false};
    CsrIndex index;
  };

  const GraphDB* graph_;
  IndexMode mode_;
  std::unique_ptr<Slot[]> slots_;
};

}  // namespace rpq
