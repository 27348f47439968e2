// Copyright 2026 The sdom Authors
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

#include "sdom/operations.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "sdom/errors.h"

namespace sdom {
namespace {

void CheckVertex(const Graph& g, Vertex v, const std::string& what) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgumentError(what + " " + std::to_string(v) +
                               " out of range for order " +
                               std::to_string(g.order()));
  }
}

// Lays the parts out side by side, merges the requested index pairs, and
// compacts each merge class onto one composed vertex.
class Amalgamation {
 public:
  explicit Amalgamation(const std::vector<AttachPart>& parts) : parts_(parts) {
    if (parts.empty()) {
      throw InvalidArgumentError("composition needs at least one part");
    }
    int total = 0;
    for (const auto& part : parts) {
      offsets_.push_back(total);
      total += part.graph.order();
    }
    parent_.resize(total);
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Global(int part, Vertex v) const { return offsets_[part] + v; }

  void Merge(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  CompositionResult Build(const std::vector<int>& merged_globals) {
    const int total = static_cast<int>(parent_.size());
    std::vector<Vertex> compact(total, kRemovedVertex);
    int next = 0;
    // Roots are the smallest member of their class, so scanning in order
    // assigns each class when its root is reached.
    for (int i = 0; i < total; ++i) {
      if (Find(i) == i) compact[i] = next++;
    }
    CompositionResult result;
    GraphBuilder builder(next);
    for (size_t p = 0; p < parts_.size(); ++p) {
      std::vector<Vertex> map(parts_[p].graph.order());
      for (Vertex v = 0; v < parts_[p].graph.order(); ++v) {
        map[v] = compact[Find(Global(static_cast<int>(p), v))];
      }
      for (const auto& [u, v] : parts_[p].graph.Edges()) {
        builder.AddEdge(map[u], map[v]);
      }
      result.vertex_maps.push_back(std::move(map));
    }
    for (int g : merged_globals) result.merged.push_back(compact[Find(g)]);
    result.graph = builder.Build();
    return result;
  }

 private:
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  const std::vector<AttachPart>& parts_;
  std::vector<int> offsets_;
  std::vector<int> parent_;
};

}  // namespace

Graph Odot(const Graph& g, Vertex v) {
  CheckVertex(g, v, "vertex");
  const VertexSet& around = g.Neighbors(v);
  GraphBuilder builder(g.order());
  for (const auto& [a, b] : g.Edges()) {
    if (around.contains(a) && around.contains(b)) continue;
    builder.AddEdge(a, b);
  }
  return builder.Build();
}

RelabeledGraph ContractClique(const Graph& g, Vertex v) {
  CheckVertex(g, v, "vertex");
  RelabeledGraph result;
  result.vertex_map.assign(g.order(), kRemovedVertex);
  for (Vertex u = 0, next = 0; u < g.order(); ++u) {
    if (u != v) result.vertex_map[u] = next++;
  }
  const auto& map = result.vertex_map;
  GraphBuilder builder(std::max(g.order() - 1, 0));
  for (const auto& [a, b] : g.Edges()) {
    if (a != v && b != v) builder.AddEdge(map[a], map[b]);
  }
  const std::vector<Vertex> around = g.Neighbors(v).Members();
  for (size_t i = 0; i < around.size(); ++i) {
    for (size_t j = i + 1; j < around.size(); ++j) {
      builder.AddEdge(map[around[i]], map[around[j]]);
    }
  }
  result.graph = builder.Build();
  return result;
}

CompositionResult DisjointUnion(const Graph& g, const Graph& h) {
  std::vector<AttachPart> parts = {{g, 0, 0}, {h, 0, 0}};
  return Amalgamation(parts).Build({});
}

CompositionResult Chain(const std::vector<AttachPart>& parts) {
  Amalgamation amalgam(parts);
  for (size_t i = 0; i < parts.size(); ++i) {
    const std::string where = "chain part " + std::to_string(i);
    CheckVertex(parts[i].graph, parts[i].x, where + " attach vertex x");
    CheckVertex(parts[i].graph, parts[i].y, where + " attach vertex y");
  }
  std::vector<int> merged;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    const int left = amalgam.Global(static_cast<int>(i), parts[i].y);
    const int right = amalgam.Global(static_cast<int>(i + 1), parts[i + 1].x);
    amalgam.Merge(left, right);
    merged.push_back(left);
  }
  return amalgam.Build(merged);
}

CompositionResult Bouquet(const std::vector<AttachPart>& parts) {
  Amalgamation amalgam(parts);
  for (size_t i = 0; i < parts.size(); ++i) {
    CheckVertex(parts[i].graph, parts[i].x,
                "bouquet part " + std::to_string(i) + " attach vertex x");
  }
  const int hub = amalgam.Global(0, parts[0].x);
  for (size_t i = 1; i < parts.size(); ++i) {
    amalgam.Merge(hub, amalgam.Global(static_cast<int>(i), parts[i].x));
  }
  return amalgam.Build({hub});
}

}  // namespace sdom
