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

#include "sdom/solver.h"

#include <bit>
#include <cstdint>
#include <vector>

#include "sdom/errors.h"

namespace sdom {
namespace {

using Mask = std::uint64_t;
constexpr int kMaxComponentOrder = 64;

Mask Bit(int i) { return Mask{1} << i; }

// Calls `accept` on the t-subsets of {0, ..., k-1} in lexicographic order of
// their sorted member lists and returns the first accepted one.
template <typename Accept>
std::optional<Mask> FirstLexSubset(int k, int t, Accept accept) {
  if (t > k) return std::nullopt;
  std::vector<int> pick(t);
  for (int i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    Mask mask = 0;
    for (int i : pick) mask |= Bit(i);
    if (accept(mask)) return mask;
    int i = t - 1;
    while (i >= 0 && pick[i] == k - t + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// One connected component relabeled to 0..k-1 with bitmask adjacency.
class Component {
 public:
  Component(const Graph& g, std::vector<Vertex> vertices)
      : vertices_(std::move(vertices)), adj_(vertices_.size(), 0) {
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < vertices_.size(); ++i) local[vertices_[i]] = i;
    for (size_t i = 0; i < vertices_.size(); ++i) {
      for (Vertex w : g.Neighbors(vertices_[i]).Members()) {
        adj_[i] |= Bit(local[w]);
      }
    }
  }

  int order() const { return static_cast<int>(vertices_.size()); }

  // Largest valid complement, lexicographically smallest among those.
  Mask BestComplement() const {
    for (int t = order() / 2; t > 0; --t) {
      auto found = FirstLexSubset(order(), t, [this](Mask complement) {
        return IsValidComplement(complement);
      });
      if (found) return *found;
    }
    return 0;
  }

  Mask MinDominatingSet() const {
    const Mask all = order() == 64 ? ~Mask{0} : Bit(order()) - 1;
    for (int t = 1; t <= order(); ++t) {
      auto found = FirstLexSubset(order(), t, [&](Mask set) {
        Mask covered = set;
        for (Mask rest = set; rest != 0; rest &= rest - 1) {
          covered |= adj_[std::countr_zero(rest)];
        }
        return covered == all;
      });
      if (found) return *found;
    }
    return all;
  }

  std::vector<Vertex> ToGlobal(Mask mask) const {
    std::vector<Vertex> out;
    for (; mask != 0; mask &= mask - 1) {
      out.push_back(vertices_[std::countr_zero(mask)]);
    }
    return out;
  }

 private:
  // Every u in the complement needs some v outside it with
  // N(v) ∩ complement = {u}.
  bool IsValidComplement(Mask complement) const {
    for (Mask rest = complement; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      bool witnessed = false;
      for (Mask cand = adj_[u] & ~complement; cand != 0; cand &= cand - 1) {
        if ((adj_[std::countr_zero(cand)] & complement) == Bit(u)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
    return true;
  }

  std::vector<Vertex> vertices_;
  std::vector<Mask> adj_;
};

std::vector<Component> SplitComponents(const Graph& g,
                                       const SolverOptions& options,
                                       const std::string& what) {
  if (g.order() > options.max_order) {
    throw GuardExceededError(what, g.order(), options.max_order);
  }
  std::vector<Component> components;
  for (auto& vertices : g.Components()) {
    if (static_cast<int>(vertices.size()) > kMaxComponentOrder) {
      throw GuardExceededError(what + " (single component)",
                               static_cast<int>(vertices.size()),
                               kMaxComponentOrder);
    }
    components.emplace_back(g, std::move(vertices));
  }
  return components;
}

}  // namespace

std::string Violation::ToString() const {
  return "u=" + std::to_string(vertex) +
         (kind == Kind::kNotDominated ? ": not dominated" : ": no witness");
}

bool IsDominating(const Graph& g, const VertexSet& s) {
  if (s.owner_order() != g.order()) {
    throw InvalidArgumentError("vertex set does not index this graph");
  }
  for (Vertex u : s.Complement().Members()) {
    if (!g.Neighbors(u).Intersects(s)) return false;
  }
  return true;
}

SuperDomCheck CheckSuperDominating(const Graph& g, const VertexSet& s) {
  if (s.owner_order() != g.order()) {
    throw InvalidArgumentError("vertex set does not index this graph");
  }
  SuperDomCheck check;
  const VertexSet outside = s.Complement();
  for (Vertex u : outside.Members()) {
    const VertexSet candidates = g.Neighbors(u).Intersection(s);
    if (candidates.empty()) {
      check.violation = Violation{u, Violation::Kind::kNotDominated};
      return check;
    }
    const VertexSet only_u = VertexSet::Of(g.order(), {u});
    Vertex witness = -1;
    for (Vertex v : candidates.Members()) {
      if (g.Neighbors(v).Intersection(outside) == only_u) {
        witness = v;
        break;
      }
    }
    if (witness < 0) {
      check.violation = Violation{u, Violation::Kind::kNoWitness};
      return check;
    }
    check.witnesses[u] = witness;
  }
  check.holds = true;
  return check;
}

bool IsSuperDominating(const Graph& g, const VertexSet& s) {
  return CheckSuperDominating(g, s).holds;
}

SuperDomCertificate GammaSp(const Graph& g, const SolverOptions& options) {
  std::vector<Vertex> outside;
  for (const auto& component : SplitComponents(g, options, "gamma_sp")) {
    for (Vertex v : component.ToGlobal(component.BestComplement())) {
      outside.push_back(v);
    }
  }
  SuperDomCertificate cert;
  cert.set = VertexSet::Of(g.order(), outside).Complement();
  cert.value = cert.set.size();
  cert.witnesses = CheckSuperDominating(g, cert.set).witnesses;
  return cert;
}

DomCertificate Gamma(const Graph& g, const SolverOptions& options) {
  std::vector<Vertex> members;
  for (const auto& component : SplitComponents(g, options, "gamma")) {
    for (Vertex v : component.ToGlobal(component.MinDominatingSet())) {
      members.push_back(v);
    }
  }
  DomCertificate cert;
  cert.set = VertexSet::Of(g.order(), members);
  cert.value = cert.set.size();
  return cert;
}

int GammaSpBruteForce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw GuardExceededError("gamma_sp brute force", n, kBruteForceMaxOrder);
  }
  int best = n;
  std::vector<Vertex> members;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) >= best) continue;
    members.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) members.push_back(v);
    }
    if (IsSuperDominating(g, VertexSet::Of(n, members))) {
      best = std::popcount(mask);
    }
  }
  return best;
}

}  // namespace sdom
