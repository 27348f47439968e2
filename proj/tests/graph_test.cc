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

#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "sdom/errors.h"
#include "sdom/families.h"

namespace sdom {
namespace {

void ExpectSimpleGraph(const Graph& g) {
  int degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.Neighbors(v).contains(v));
    for (Vertex w : g.Neighbors(v).Members()) {
      EXPECT_TRUE(g.Neighbors(w).contains(v));
    }
    degree_sum += g.Degree(v);
  }
  EXPECT_EQ(degree_sum, 2 * g.size());
}

TEST(GraphTest, NeighborsOfPathMiddle) {
  const Graph p3 = PathGraph(3);
  EXPECT_EQ(p3.Neighbors(1), VertexSet::Of(3, {0, 2}));
  EXPECT_FALSE(p3.Neighbors(1).contains(1));
}

TEST(GraphTest, NeighborsOfCliqueAndStar) {
  EXPECT_EQ(CompleteGraph(4).Neighbors(0), VertexSet::Of(4, {1, 2, 3}));
  EXPECT_EQ(StarGraph(5).Neighbors(0), VertexSet::Of(6, {1, 2, 3, 4, 5}));
}

TEST(GraphTest, ClosedNeighbors) {
  EXPECT_EQ(PathGraph(3).ClosedNeighbors(1), VertexSet::Of(3, {0, 1, 2}));
  EXPECT_EQ(Graph::Edgeless(3).ClosedNeighbors(2), VertexSet::Of(3, {2}));
  EXPECT_EQ(CycleGraph(4).ClosedNeighbors(2), VertexSet::Of(4, {1, 2, 3}));
}

TEST(GraphTest, Degrees) {
  EXPECT_EQ(FriendshipGraph(3).Degree(0), 6);
  EXPECT_EQ(PathGraph(2).Degree(0), 1);
  EXPECT_EQ(CompleteGraph(6).Degree(3), 5);
}

TEST(GraphTest, Pendant) {
  EXPECT_TRUE(PathGraph(3).IsPendant(0));
  EXPECT_TRUE(PathGraph(3).IsPendant(2));
  for (Vertex v = 0; v < 5; ++v) EXPECT_FALSE(CycleGraph(5).IsPendant(v));
  EXPECT_TRUE(StarGraph(4).IsPendant(3));
  EXPECT_FALSE(StarGraph(4).IsPendant(0));
}

TEST(GraphTest, OutOfRangeVertexThrows) {
  const Graph g = PathGraph(3);
  EXPECT_THROW(g.Neighbors(3), InvalidArgumentError);
  EXPECT_THROW(g.ClosedNeighbors(-1), InvalidArgumentError);
  EXPECT_THROW(g.Degree(7), InvalidArgumentError);
  EXPECT_THROW(g.IsPendant(3), InvalidArgumentError);
}

TEST(GraphTest, FromEdgesRejectsLoopsDuplicatesAndRange) {
  const std::vector<Edge> loop = {{0, 0}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  const std::vector<Edge> range = {{0, 2}};
  EXPECT_THROW(Graph::FromEdges(2, loop), InvalidArgumentError);
  EXPECT_THROW(Graph::FromEdges(2, dup), InvalidArgumentError);
  EXPECT_THROW(Graph::FromEdges(2, range), InvalidArgumentError);
}

TEST(GraphTest, BuilderCollapsesRepeatedEdges) {
  const Graph g = GraphBuilder(3).AddEdge(0, 1).AddEdge(1, 0).Build();
  EXPECT_EQ(g.size(), 1);
}

TEST(GraphTest, ComponentsAndInducedSubgraph) {
  const std::vector<Edge> edges = {{0, 3}, {3, 4}, {1, 2}};
  const Graph g = Graph::FromEdges(6, edges);
  const auto components = g.Components();
  ASSERT_EQ(components.size(), 3u);
  EXPECT_EQ(components[0], (std::vector<Vertex>{0, 3, 4}));
  EXPECT_EQ(components[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(components[2], (std::vector<Vertex>{5}));
  EXPECT_FALSE(g.IsConnected());

  const std::vector<Vertex> pick = {4, 0, 3};
  const Graph sub = g.InducedSubgraph(pick);
  EXPECT_EQ(sub.Edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(GraphTest, HandshakeAndSymmetryOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = GnpGraph(static_cast<int>(seed % 20), Rational(1, 3), seed);
    ExpectSimpleGraph(g);
  }
}

}  // namespace
}  // namespace sdom
