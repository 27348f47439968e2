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

#ifndef SDOM_SOLVER_H_
#define SDOM_SOLVER_H_

#include <map>
#include <optional>
#include <string>

#include "sdom/graph.h"
#include "sdom/vertex_set.h"

namespace sdom {

struct SolverOptions {
  // Largest graph order the exact searches accept. Exceeding it raises
  // GuardExceededError; there is no approximate fallback.
  int max_order = 24;
};

// Hard limit of GammaSpBruteForce.
inline constexpr int kBruteForceMaxOrder = 16;

// u -> v with v in S and N(v) ∩ (V - S) = {u}.
using WitnessMap = std::map<Vertex, Vertex>;

struct SuperDomCertificate {
  VertexSet set;
  WitnessMap witnesses;
  int value = 0;
};

struct DomCertificate {
  VertexSet set;
  int value = 0;
};

struct Violation {
  enum class Kind { kNotDominated, kNoWitness };
  Vertex vertex = 0;
  Kind kind = Kind::kNoWitness;

  // "u=1: no witness", "u=4: not dominated"
  std::string ToString() const;
};

struct SuperDomCheck {
  bool holds = false;
  // Complete when holds; otherwise the witnesses found before the violation.
  WitnessMap witnesses;
  // First violated vertex in increasing vertex order, when !holds.
  std::optional<Violation> violation;
};

// Every vertex outside s has a neighbor in s. Throws InvalidArgumentError when
// s does not index g.
bool IsDominating(const Graph& g, const VertexSet& s);

// Checks every u outside s, in increasing order, for a private witness: some
// v in s whose only neighbor outside s is u. No matching is needed to assign
// witnesses: a witness v names exactly one vertex of V - S (the unique member
// of N(v) ∩ (V - S)), so two different u can never compete for the same v and
// an independent per-u scan is exact. The smallest admissible v is reported.
// A private witness is in particular a neighbor in s, so passing the scan
// implies domination.
SuperDomCheck CheckSuperDominating(const Graph& g, const VertexSet& s);
bool IsSuperDominating(const Graph& g, const VertexSet& s);

// Minimum super dominating set.
//
// Components are solved independently and merged. Inside a component of order
// k the search enumerates candidate complements by decreasing size, starting
// at floor(k / 2) (a complement can never exceed its private witnesses), in
// lexicographic order; the first valid complement wins. The certificate is
// therefore the one whose complement is the lexicographically smallest among
// the largest valid complements, which is also what the merge of per-component
// answers yields. Edgeless graphs get S = V.
//
// Throws GuardExceededError when g.order() > options.max_order (or when a
// single component exceeds 64 vertices).
SuperDomCertificate GammaSp(const Graph& g, const SolverOptions& options = {});

// Minimum dominating set; ties broken towards the lexicographically smallest
// set. Same guard behavior as GammaSp.
DomCertificate Gamma(const Graph& g, const SolverOptions& options = {});

// Minimum |S| over all 2^n subsets passing IsSuperDominating, without
// component splitting or size bounds. Independent oracle for GammaSp; throws
// GuardExceededError when g.order() > kBruteForceMaxOrder.
int GammaSpBruteForce(const Graph& g);

}  // namespace sdom

#endif  // SDOM_SOLVER_H_
