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

#ifndef SDOM_FAMILIES_H_
#define SDOM_FAMILIES_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdom/graph.h"
#include "sdom/rational.h"

namespace sdom {

// Generators for the named families. Labeling conventions are part of the
// contract and other modules rely on them:
//
//   PathGraph(n)                 0 - 1 - ... - (n-1)
//   CycleGraph(n)                0 - 1 - ... - (n-1) - 0
//   CompleteGraph(n)             all pairs
//   CompleteBipartiteGraph(n,m)  sides {0..n-1} and {n..n+m-1}
//   StarGraph(n)                 K_{1,n}: center 0, leaves 1..n
//   FriendshipGraph(n)           center 0, triangles {0, 2i-1, 2i}, i = 1..n
//
// Each throws InvalidArgumentError when the parameters fall outside the
// family's domain (path n >= 1, cycle n >= 3, complete n >= 1, complete
// bipartite min(n, m) >= 1, star n >= 1, friendship n >= 1).
Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int n, int m);
Graph StarGraph(int n);
Graph FriendshipGraph(int n);

// Erdos-Renyi G(n, p). Pair {i, j}, i < j, with lexicographic index k
// (0, 1), (0, 2), ..., (n-2, n-1) is an edge iff
//
//   floor(SplitMix64(seed, k) * p.den() / 2^64) < p.num()
//
// where SplitMix64(seed, k) is the (k+1)-th output of a SplitMix64 generator
// seeded with `seed`. The stream is counter based, so the graph depends only
// on (n, p, seed). Requires 0 <= p <= 1 and p.den() <= 2^32.
Graph GnpGraph(int n, const Rational& p, std::uint64_t seed);

// Counter-based SplitMix64: the (index+1)-th output of the generator seeded
// with `seed`.
std::uint64_t SplitMix64(std::uint64_t seed, std::uint64_t index);

enum class FamilyKind {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kStar,
  kFriendship,
  kGnp,
};

std::string_view FamilyName(FamilyKind kind);
// Accepts the names FamilyName produces ("path", "complete_bipartite", ...)
// plus "complete-bipartite". Throws InvalidArgumentError otherwise.
FamilyKind ParseFamilyKind(std::string_view name);

// Replayable description of one family instance.
struct GraphFamily {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<int> params;  // n, or (n, m) for complete bipartite
  Rational p = 0;           // gnp only
  std::uint64_t seed = 0;   // gnp only

  static GraphFamily Path(int n) { return {FamilyKind::kPath, {n}}; }
  static GraphFamily Cycle(int n) { return {FamilyKind::kCycle, {n}}; }
  static GraphFamily Complete(int n) { return {FamilyKind::kComplete, {n}}; }
  static GraphFamily CompleteBipartite(int n, int m) {
    return {FamilyKind::kCompleteBipartite, {n, m}};
  }
  static GraphFamily Star(int n) { return {FamilyKind::kStar, {n}}; }
  static GraphFamily Friendship(int n) {
    return {FamilyKind::kFriendship, {n}};
  }
  static GraphFamily Gnp(int n, Rational p, std::uint64_t seed) {
    return {FamilyKind::kGnp, {n}, p, seed};
  }

  // e.g. "friendship(3)", "gnp(8,1/2,7)"
  std::string ToString() const;
  nlohmann::json ToJson() const;
};

struct FamilyGraph {
  GraphFamily family;
  Graph graph;
  // Named special vertices, e.g. {"center": 0}.
  std::map<std::string, Vertex> distinguished;
};

FamilyGraph Generate(const GraphFamily& family);

}  // namespace sdom

#endif  // SDOM_FAMILIES_H_
