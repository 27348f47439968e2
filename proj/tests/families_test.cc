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

#include "sdom/families.h"

#include "gtest/gtest.h"
#include "sdom/errors.h"
#include "sdom/isomorphism.h"
#include "sdom/operations.h"

namespace sdom {
namespace {

TEST(FamiliesTest, OrderAndSizeFormulas) {
  for (int n = 1; n <= 50; ++n) {
    EXPECT_EQ(PathGraph(n).order(), n);
    EXPECT_EQ(PathGraph(n).size(), n - 1);
    EXPECT_EQ(CompleteGraph(n).size(), n * (n - 1) / 2);
    EXPECT_EQ(StarGraph(n).order(), n + 1);
    EXPECT_EQ(StarGraph(n).size(), n);
    EXPECT_EQ(FriendshipGraph(n).order(), 2 * n + 1);
    EXPECT_EQ(FriendshipGraph(n).size(), 3 * n);
    if (n >= 3) {
      EXPECT_EQ(CycleGraph(n).order(), n);
      EXPECT_EQ(CycleGraph(n).size(), n);
    }
    for (int m = 1; m <= 50; m += 7) {
      EXPECT_EQ(CompleteBipartiteGraph(n, m).order(), n + m);
      EXPECT_EQ(CompleteBipartiteGraph(n, m).size(), n * m);
    }
  }
}

TEST(FamiliesTest, LabelingConventions) {
  const Graph path = PathGraph(4);
  EXPECT_EQ(path.Edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(CycleGraph(5).HasEdge(4, 0));
  const Graph f3 = FriendshipGraph(3);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(f3.HasEdge(0, 2 * i - 1));
    EXPECT_TRUE(f3.HasEdge(0, 2 * i));
    EXPECT_TRUE(f3.HasEdge(2 * i - 1, 2 * i));
  }
  EXPECT_EQ(StarGraph(3).Degree(0), 3);
}

TEST(FamiliesTest, FriendshipTwo) {
  const Graph f2 = FriendshipGraph(2);
  EXPECT_EQ(f2.order(), 5);
  EXPECT_EQ(f2.size(), 6);
  EXPECT_EQ(f2.Degree(0), 4);
}

TEST(FamiliesTest, CompleteBipartiteDegreeSequence) {
  EXPECT_EQ(CompleteBipartiteGraph(2, 3).DegreeSequence(),
            (std::vector<int>{3, 3, 2, 2, 2}));
}

TEST(FamiliesTest, StarIsCompleteBipartiteOneN) {
  EXPECT_TRUE(IsIsomorphic(StarGraph(7), CompleteBipartiteGraph(1, 7)));
}

TEST(FamiliesTest, DomainErrors) {
  EXPECT_THROW(PathGraph(0), InvalidArgumentError);
  EXPECT_THROW(CycleGraph(2), InvalidArgumentError);
  EXPECT_THROW(CompleteGraph(0), InvalidArgumentError);
  EXPECT_THROW(CompleteBipartiteGraph(0, 3), InvalidArgumentError);
  EXPECT_THROW(StarGraph(0), InvalidArgumentError);
  EXPECT_THROW(FriendshipGraph(0), InvalidArgumentError);
  EXPECT_THROW(GnpGraph(4, Rational(3, 2), 1), InvalidArgumentError);
  EXPECT_THROW(GnpGraph(4, Rational(-1, 2), 1), InvalidArgumentError);
  EXPECT_THROW(Generate({FamilyKind::kCompleteBipartite, {3}}),
               InvalidArgumentError);
}

TEST(FamiliesTest, GnpExtremes) {
  EXPECT_EQ(GnpGraph(5, 0, 42), Graph::Edgeless(5));
  EXPECT_EQ(GnpGraph(5, 1, 42), CompleteGraph(5));
  EXPECT_EQ(GnpGraph(0, Rational(1, 2), 42).order(), 0);
}

TEST(FamiliesTest, GnpIsDeterministic) {
  EXPECT_EQ(GnpGraph(8, Rational(1, 2), 7), GnpGraph(8, Rational(1, 2), 7));
  EXPECT_NE(GnpGraph(12, Rational(1, 2), 7), GnpGraph(12, Rational(1, 2), 8));
}

// Frozen from the documented stream so a platform or refactoring change to
// the generator is caught.
TEST(FamiliesTest, GnpStreamIsFrozen) {
  EXPECT_EQ(SplitMix64(0, 0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(SplitMix64(0, 1), 0x6E789E6AA1B965F4ULL);
  const Graph g = GnpGraph(8, Rational(1, 2), 7);
  const std::vector<Edge> expected = {
      {0, 1}, {0, 2}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4},
      {1, 5}, {2, 7}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  EXPECT_EQ(g.Edges(), expected);
}

TEST(FamiliesTest, GnpEdgeDensityIsPlausible) {
  int edges = 0;
  int pairs = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = GnpGraph(30, Rational(1, 4), seed);
    edges += g.size();
    pairs += 30 * 29 / 2;
  }
  const double density = static_cast<double>(edges) / pairs;
  EXPECT_NEAR(density, 0.25, 0.02);
}

TEST(FamiliesTest, GenerateRecordsDistinguishedVertices) {
  const FamilyGraph f = Generate(GraphFamily::Friendship(3));
  EXPECT_EQ(f.distinguished.at("center"), 0);
  EXPECT_EQ(f.family.ToString(), "friendship(3)");
  const FamilyGraph g = Generate(GraphFamily::Gnp(8, Rational(1, 2), 7));
  EXPECT_EQ(g.family.ToString(), "gnp(8,1/2,7)");
  EXPECT_EQ(g.graph, GnpGraph(8, Rational(1, 2), 7));
  for (const auto& [name, v] :
       Generate(GraphFamily::CompleteBipartite(2, 3)).distinguished) {
    EXPECT_LT(v, 5) << name;
  }
}

TEST(FamiliesTest, FriendshipOdotCenterIsStar) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(IsIsomorphic(Odot(FriendshipGraph(n), 0), StarGraph(2 * n)));
  }
}

TEST(FamiliesTest, ParseFamilyKind) {
  EXPECT_EQ(ParseFamilyKind("complete-bipartite"),
            FamilyKind::kCompleteBipartite);
  EXPECT_EQ(ParseFamilyKind("gnp"), FamilyKind::kGnp);
  EXPECT_THROW(ParseFamilyKind("grid"), InvalidArgumentError);
}

}  // namespace
}  // namespace sdom
