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

#ifndef SDOM_GRAPH_H_
#define SDOM_GRAPH_H_

#include <span>
#include <utility>
#include <vector>

#include "sdom/vertex_set.h"

namespace sdom {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on the vertices 0..order()-1.
//
// Adjacency is one VertexSet per vertex. Construction enforces the simple-graph
// invariants: no self-loops, symmetric adjacency, no parallel edges. Every
// operation in the library returns a fresh Graph instead of mutating one.
class Graph {
 public:
  // The empty graph on zero vertices.
  Graph() = default;

  // Throws InvalidArgumentError on a self-loop, an out-of-range endpoint or a
  // repeated edge ({u, v} and {v, u} count as the same edge).
  static Graph FromEdges(int order, std::span<const Edge> edges);
  static Graph Edgeless(int order);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return size_; }

  const VertexSet& Neighbors(Vertex v) const;
  VertexSet ClosedNeighbors(Vertex v) const;
  int Degree(Vertex v) const;
  bool IsPendant(Vertex v) const { return Degree(v) == 1; }
  bool HasEdge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> Edges() const;
  std::vector<int> DegreeSequence() const;  // non-increasing

  // Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> Components() const;
  bool IsConnected() const;

  // Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  Graph InducedSubgraph(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  friend class GraphBuilder;
  void CheckVertex(Vertex v) const;

  std::vector<VertexSet> adjacency_;
  int size_ = 0;
};

// Accumulates edges with set semantics (repeated edges collapse) and produces
// an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  int order() const { return order_; }
  // Throws InvalidArgumentError on a self-loop or out-of-range endpoint.
  GraphBuilder& AddEdge(Vertex u, Vertex v);
  bool HasEdge(Vertex u, Vertex v) const;
  Graph Build() const;

 private:
  int order_;
  std::vector<std::vector<bool>> adjacent_;
};

}  // namespace sdom

#endif  // SDOM_GRAPH_H_
