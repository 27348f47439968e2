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

#include <string>

#include "sdom/errors.h"

namespace sdom {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgumentError(what);
}

// floor(draw * den / 2^64) for den <= 2^32, without 128-bit arithmetic.
std::uint64_t ScaledDraw(std::uint64_t draw, std::uint64_t den) {
  const std::uint64_t high = (draw >> 32) * den;
  const std::uint64_t low = (draw & 0xFFFFFFFFULL) * den;
  return (high + (low >> 32)) >> 32;
}

}  // namespace

Graph PathGraph(int n) {
  Require(n >= 1, "path requires n >= 1, got " + std::to_string(n));
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.AddEdge(v, v + 1);
  return b.Build();
}

Graph CycleGraph(int n) {
  Require(n >= 3, "cycle requires n >= 3, got " + std::to_string(n));
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.AddEdge(v, (v + 1) % n);
  return b.Build();
}

Graph CompleteGraph(int n) {
  Require(n >= 1, "complete graph requires n >= 1, got " + std::to_string(n));
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.AddEdge(u, v);
  }
  return b.Build();
}

Graph CompleteBipartiteGraph(int n, int m) {
  Require(n >= 1 && m >= 1, "complete bipartite graph requires min(n, m) >= 1");
  GraphBuilder b(n + m);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = n; v < n + m; ++v) b.AddEdge(u, v);
  }
  return b.Build();
}

Graph StarGraph(int n) {
  Require(n >= 1, "star requires n >= 1, got " + std::to_string(n));
  return CompleteBipartiteGraph(1, n);
}

Graph FriendshipGraph(int n) {
  Require(n >= 1, "friendship graph requires n >= 1, got " + std::to_string(n));
  GraphBuilder b(2 * n + 1);
  for (int i = 1; i <= n; ++i) {
    b.AddEdge(0, 2 * i - 1).AddEdge(0, 2 * i).AddEdge(2 * i - 1, 2 * i);
  }
  return b.Build();
}

std::uint64_t SplitMix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph GnpGraph(int n, const Rational& p, std::uint64_t seed) {
  Require(n >= 0, "gnp requires n >= 0");
  Require(p >= Rational(0) && p <= Rational(1),
          "edge probability must lie in [0, 1], got " + p.ToString());
  Require(p.den() <= (std::int64_t{1} << 32),
          "edge probability denominator must be at most 2^32");
  const auto num = static_cast<std::uint64_t>(p.num());
  const auto den = static_cast<std::uint64_t>(p.den());
  GraphBuilder b(n);
  std::uint64_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if (ScaledDraw(SplitMix64(seed, k), den) < num) b.AddEdge(u, v);
    }
  }
  return b.Build();
}

std::string_view FamilyName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath:
      return "path";
    case FamilyKind::kCycle:
      return "cycle";
    case FamilyKind::kComplete:
      return "complete";
    case FamilyKind::kCompleteBipartite:
      return "complete_bipartite";
    case FamilyKind::kStar:
      return "star";
    case FamilyKind::kFriendship:
      return "friendship";
    case FamilyKind::kGnp:
      return "gnp";
  }
  return "unknown";
}

FamilyKind ParseFamilyKind(std::string_view name) {
  for (auto kind : {FamilyKind::kPath, FamilyKind::kCycle,
                    FamilyKind::kComplete, FamilyKind::kCompleteBipartite,
                    FamilyKind::kStar, FamilyKind::kFriendship,
                    FamilyKind::kGnp}) {
    if (FamilyName(kind) == name) return kind;
  }
  if (name == "complete-bipartite") return FamilyKind::kCompleteBipartite;
  throw InvalidArgumentError("unknown family \"" + std::string(name) + "\"");
}

std::string GraphFamily::ToString() const {
  std::string out(FamilyName(kind));
  out += "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(params[i]);
  }
  if (kind == FamilyKind::kGnp) {
    out += "," + p.ToString() + "," + std::to_string(seed);
  }
  return out + ")";
}

nlohmann::json GraphFamily::ToJson() const {
  nlohmann::json j;
  j["family"] = FamilyName(kind);
  j["params"] = params;
  if (kind == FamilyKind::kGnp) {
    j["p"] = p.ToString();
    j["seed"] = seed;
  }
  return j;
}

FamilyGraph Generate(const GraphFamily& family) {
  const auto& params = family.params;
  const size_t arity = family.kind == FamilyKind::kCompleteBipartite ? 2 : 1;
  Require(params.size() == arity, std::string(FamilyName(family.kind)) +
                                      " takes " + std::to_string(arity) +
                                      " integer parameter(s)");
  FamilyGraph out{family, Graph(), {}};
  switch (family.kind) {
    case FamilyKind::kPath:
      out.graph = PathGraph(params[0]);
      out.distinguished = {{"first", 0}, {"last", params[0] - 1}};
      break;
    case FamilyKind::kCycle:
      out.graph = CycleGraph(params[0]);
      out.distinguished = {{"start", 0}};
      break;
    case FamilyKind::kComplete:
      out.graph = CompleteGraph(params[0]);
      break;
    case FamilyKind::kCompleteBipartite:
      out.graph = CompleteBipartiteGraph(params[0], params[1]);
      out.distinguished = {{"left_first", 0}, {"right_first", params[0]}};
      break;
    case FamilyKind::kStar:
      out.graph = StarGraph(params[0]);
      out.distinguished = {{"center", 0}};
      break;
    case FamilyKind::kFriendship:
      out.graph = FriendshipGraph(params[0]);
      out.distinguished = {{"center", 0}};
      break;
    case FamilyKind::kGnp:
      out.graph = GnpGraph(params[0], family.p, family.seed);
      break;
  }
  return out;
}

}  // namespace sdom
