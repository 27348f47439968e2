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

#include "sdom/graph.h"

#include <algorithm>
#include <functional>
#include <string>

#include "sdom/errors.h"

namespace sdom {

Graph Graph::FromEdges(int order, std::span<const Edge> edges) {
  GraphBuilder builder(order);
  for (const auto& [u, v] : edges) {
    if (u >= 0 && u < order && v >= 0 && v < order && builder.HasEdge(u, v)) {
      throw InvalidArgumentError("duplicate edge {" + std::to_string(u) +
                                 ", " + std::to_string(v) + "}");
    }
    builder.AddEdge(u, v);
  }
  return builder.Build();
}

Graph Graph::Edgeless(int order) { return GraphBuilder(order).Build(); }

const VertexSet& Graph::Neighbors(Vertex v) const {
  CheckVertex(v);
  return adjacency_[v];
}

VertexSet Graph::ClosedNeighbors(Vertex v) const {
  return Neighbors(v).With(v);
}

int Graph::Degree(Vertex v) const { return Neighbors(v).size(); }

bool Graph::HasEdge(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  return adjacency_[u].contains(v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(size_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u].Members()) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<int> Graph::DegreeSequence() const {
  std::vector<int> degrees;
  degrees.reserve(order());
  for (const auto& nbrs : adjacency_) degrees.push_back(nbrs.size());
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

std::vector<std::vector<Vertex>> Graph::Components() const {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(order(), false);
  for (Vertex root = 0; root < order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component;
    std::vector<Vertex> stack = {root};
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (Vertex w : adjacency_[u].Members()) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool Graph::IsConnected() const { return Components().size() <= 1; }

Graph Graph::InducedSubgraph(std::span<const Vertex> vertices) const {
  std::vector<int> position(order(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    CheckVertex(vertices[i]);
    if (position[vertices[i]] != -1) {
      throw InvalidArgumentError("repeated vertex in induced subgraph");
    }
    position[vertices[i]] = static_cast<int>(i);
  }
  GraphBuilder builder(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]].Members()) {
      if (position[w] > static_cast<int>(i)) {
        builder.AddEdge(static_cast<Vertex>(i), position[w]);
      }
    }
  }
  return builder.Build();
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgumentError("vertex " + std::to_string(v) +
                               " out of range for order " +
                               std::to_string(order()));
  }
}

GraphBuilder::GraphBuilder(int order) : order_(order) {
  if (order < 0) {
    throw InvalidArgumentError("graph order must be non-negative");
  }
  adjacent_.assign(order, std::vector<bool>(order, false));
}

GraphBuilder& GraphBuilder::AddEdge(Vertex u, Vertex v) {
  if (u < 0 || u >= order_ || v < 0 || v >= order_) {
    throw InvalidArgumentError("edge {" + std::to_string(u) + ", " +
                               std::to_string(v) + "} out of range for order " +
                               std::to_string(order_));
  }
  if (u == v) {
    throw InvalidArgumentError("self-loop at vertex " + std::to_string(u));
  }
  adjacent_[u][v] = true;
  adjacent_[v][u] = true;
  return *this;
}

bool GraphBuilder::HasEdge(Vertex u, Vertex v) const {
  return adjacent_.at(u).at(v);
}

Graph GraphBuilder::Build() const {
  Graph g;
  g.adjacency_.reserve(order_);
  int degree_sum = 0;
  for (Vertex u = 0; u < order_; ++u) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < order_; ++v) {
      if (adjacent_[u][v]) members.push_back(v);
    }
    degree_sum += static_cast<int>(members.size());
    g.adjacency_.push_back(VertexSet::Of(order_, members));
  }
  g.size_ = degree_sum / 2;
  return g;
}

}  // namespace sdom
