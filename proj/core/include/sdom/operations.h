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

#ifndef SDOM_OPERATIONS_H_
#define SDOM_OPERATIONS_H_

#include <vector>

#include "sdom/graph.h"

namespace sdom {

// Marks a vertex that a relabeling dropped.
inline constexpr Vertex kRemovedVertex = -1;

// One input graph of a point-attaching construction. `y` is only read by
// Chain; it may equal `x`.
struct AttachPart {
  Graph graph;
  Vertex x = 0;
  Vertex y = 0;
};

struct CompositionResult {
  Graph graph;
  // vertex_maps[i][u] is the composed index of vertex u of part i.
  std::vector<std::vector<Vertex>> vertex_maps;
  // Composed indices of the identified vertices: for a chain, the vertex that
  // joins parts i and i+1 at position i; for a bouquet, the single vertex x.
  std::vector<Vertex> merged;
};

struct RelabeledGraph {
  Graph graph;
  // vertex_map[u] is the new index of u, or kRemovedVertex.
  std::vector<Vertex> vertex_map;
};

// G with every edge between two neighbors of v removed. Same vertex set; a
// pendant v leaves the graph unchanged.
Graph Odot(const Graph& g, Vertex v);

// G/v: delete v, then make its former open neighborhood a clique. Remaining
// vertices keep their relative order.
RelabeledGraph ContractClique(const Graph& g, Vertex v);

// Parts laid side by side: g keeps 0..g.order()-1, h is shifted by g.order().
CompositionResult DisjointUnion(const Graph& g, const Graph& h);

// Point-attaching by vertex identification.
//
// Parts are first laid out side by side (part i shifted by the orders of the
// parts before it). Each class of identified vertices is then represented by
// its smallest laid-out index and the classes are compacted in that order, so
// an identified vertex lands on the smallest index available to it.
//
// Chain identifies y_i of part i with x_{i+1} of part i+1. Bouquet identifies
// every x_i into one vertex. Both throw InvalidArgumentError on an empty part
// list or an attach vertex outside its part.
CompositionResult Chain(const std::vector<AttachPart>& parts);
CompositionResult Bouquet(const std::vector<AttachPart>& parts);

}  // namespace sdom

#endif  // SDOM_OPERATIONS_H_
