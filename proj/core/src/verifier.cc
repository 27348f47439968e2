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

#include "sdom/verifier.h"

#include <string>
#include <utility>

#include "sdom/errors.h"

namespace sdom {
namespace {

constexpr auto kLe = Relation::kLessEqual;
constexpr auto kEq = Relation::kEqual;
constexpr auto kGe = Relation::kGreaterEqual;

std::string Str(int x) { return std::to_string(x); }

int SolveSp(const Graph& g, const VerifierOptions& options) {
  return GammaSp(g, options.solver).value;
}

void RequireConnectedParts(const std::vector<AttachPart>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].graph.IsConnected()) {
      throw InvalidArgumentError("part " + std::to_string(i) +
                                 " is not connected");
    }
  }
}

// Solves every part and returns the sum, recording each value.
int SumOfParts(const std::vector<AttachPart>& parts,
               const VerifierOptions& options, TheoremReport& report) {
  int sum = 0;
  auto& values = report.witness["part_values"] = nlohmann::json::array();
  for (const auto& part : parts) {
    const int value = SolveSp(part.graph, options);
    values.push_back(value);
    sum += value;
  }
  return sum;
}

// The unique member of N(v) - s, or -1 when there are zero or several.
Vertex PrivateOutsideNeighbor(const Graph& g, const VertexSet& s, Vertex v) {
  const VertexSet outside = g.Neighbors(v).Difference(s);
  return outside.size() == 1 ? outside.First() : -1;
}


TheoremReport SkippedForDegree(std::string id, int degree) {
  TheoremReport report(std::move(id));
  report.Skip("deg(v) = " + Str(degree) + " < 2");
  return report;
}

}  // namespace

nlohmann::json CertificateJson(const SuperDomCertificate& cert) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [u, v] : cert.witnesses) witnesses[Str(u)] = v;
  return {{"value", cert.value},
          {"set", cert.set.Members()},
          {"witnesses", witnesses}};
}

nlohmann::json CertificateJson(const DomCertificate& cert) {
  return {{"value", cert.value}, {"set", cert.set.Members()}};
}

TheoremReport CheckSandwich(const Graph& g, const VerifierOptions& options) {
  if (g.size() == 0) {
    throw InvalidArgumentError(
        "sandwich bound is stated for graphs with at least one edge");
  }
  const DomCertificate dom = Gamma(g, options.solver);
  const SuperDomCertificate sp = GammaSp(g, options.solver);
  const Rational half_n(g.order(), 2);
  TheoremReport report("T1");
  report.AddLeg("1 <= gamma", 1, kLe, dom.value);
  report.AddLeg("gamma <= n/2", dom.value, kLe, half_n);
  report.AddLeg("n/2 <= gamma_sp", half_n, kLe, sp.value);
  report.AddLeg("gamma_sp <= n-1", sp.value, kLe, g.order() - 1);
  report.witness["gamma"] = CertificateJson(dom);
  report.witness["gamma_sp"] = CertificateJson(sp);
  return report;
}

std::string_view ClosedFormTheoremId(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath:
      return "T2i";
    case FamilyKind::kCycle:
      return "T2ii";
    case FamilyKind::kComplete:
      return "T2iii";
    case FamilyKind::kCompleteBipartite:
      return "T2iv";
    case FamilyKind::kStar:
      return "T2v";
    case FamilyKind::kFriendship:
      return "T_Fn";
    case FamilyKind::kGnp:
      break;
  }
  return "";
}

std::optional<int> ClosedFormGammaSp(const GraphFamily& family) {
  const auto& p = family.params;
  switch (family.kind) {
    case FamilyKind::kPath:
      if (p.size() == 1 && p[0] >= 3) return (p[0] + 1) / 2;
      break;
    case FamilyKind::kCycle:
      if (p.size() == 1 && p[0] >= 3) {
        const int n = p[0];
        return (n % 4 == 0 || n % 4 == 3) ? (n + 1) / 2 : (n + 2) / 2;
      }
      break;
    case FamilyKind::kComplete:
      if (p.size() == 1 && p[0] >= 2) return p[0] - 1;
      break;
    case FamilyKind::kCompleteBipartite:
      if (p.size() == 2 && std::min(p[0], p[1]) >= 2) return p[0] + p[1] - 2;
      break;
    case FamilyKind::kStar:
      if (p.size() == 1 && p[0] >= 1) return p[0];
      break;
    case FamilyKind::kFriendship:
      if (p.size() == 1 && p[0] >= 1) return p[0] + 1;
      break;
    case FamilyKind::kGnp:
      break;
  }
  return std::nullopt;
}

TheoremReport CheckClosedForm(const GraphFamily& family,
                              const VerifierOptions& options) {
  const auto expected = ClosedFormGammaSp(family);
  if (!expected) {
    throw InvalidArgumentError(family.ToString() +
                               " is outside every closed-form result");
  }
  const FamilyGraph instance = Generate(family);
  const SuperDomCertificate sp = GammaSp(instance.graph, options.solver);
  TheoremReport report{std::string(ClosedFormTheoremId(family.kind))};
  report.instance = family.ToJson();
  report.AddLeg("gamma_sp == closed form", sp.value, kEq, *expected);
  report.witness["gamma_sp"] = CertificateJson(sp);
  return report;
}

std::vector<GraphFamily> ClosedFormGrid(int max_order) {
  std::vector<GraphFamily> grid;
  for (int n = 3; n <= max_order; ++n) grid.push_back(GraphFamily::Path(n));
  for (int n = 3; n <= max_order; ++n) grid.push_back(GraphFamily::Cycle(n));
  for (int n = 2; n <= max_order; ++n) grid.push_back(GraphFamily::Complete(n));
  for (int n = 2; 2 * n <= max_order; ++n) {
    for (int m = n; n + m <= max_order; ++m) {
      grid.push_back(GraphFamily::CompleteBipartite(n, m));
    }
  }
  for (int n = 1; n + 1 <= max_order; ++n) grid.push_back(GraphFamily::Star(n));
  for (int n = 1; 2 * n + 1 <= max_order; ++n) {
    grid.push_back(GraphFamily::Friendship(n));
  }
  return grid;
}

std::vector<TheoremReport> CheckClosedForms(int max_order,
                                            const VerifierOptions& options) {
  std::vector<TheoremReport> reports;
  for (const auto& family : ClosedFormGrid(max_order)) {
    reports.push_back(CheckClosedForm(family, options));
  }
  return reports;
}

TheoremReport CheckOdot(const Graph& g, Vertex v,
                        const VerifierOptions& options) {
  const int degree = g.Degree(v);
  if (degree == 0) return SkippedForDegree("T_odot", degree);
  const SuperDomCertificate base = GammaSp(g, options.solver);
  const SuperDomCertificate after = GammaSp(Odot(g, v), options.solver);
  TheoremReport report(degree == 1 ? "P_odot_pendant" : "T_odot");
  if (degree == 1) {
    report.AddLeg("gamma_sp(G odot v) == gamma_sp(G)", after.value, kEq,
                  base.value);
  } else {
    report.AddLeg("gamma_sp(G odot v) <= gamma_sp(G) + floor(deg/2) - 1",
                  after.value, kLe, base.value + degree / 2 - 1);
  }
  report.witness["gamma_sp_G"] = CertificateJson(base);
  report.witness["gamma_sp_odot"] = CertificateJson(after);
  return report;
}

TheoremReport CheckContract(const Graph& g, Vertex v,
                            const VerifierOptions& options) {
  const int degree = g.Degree(v);
  if (degree < 2) return SkippedForDegree("T_Gv", degree);
  const SuperDomCertificate base = GammaSp(g, options.solver);
  const SuperDomCertificate after =
      GammaSp(ContractClique(g, v).graph, options.solver);
  TheoremReport report("T_Gv");
  report.AddLeg("gamma_sp(G/v) <= gamma_sp(G) + floor(deg/2) - 1",
                after.value, kLe, base.value + degree / 2 - 1);
  report.witness["gamma_sp_G"] = CertificateJson(base);
  report.witness["gamma_sp_contract"] = CertificateJson(after);
  return report;
}

TheoremReport CheckCombinedCorollary(const Graph& g, Vertex v,
                                     const VerifierOptions& options) {
  const int degree = g.Degree(v);
  if (degree < 2) return SkippedForDegree("C_combined", degree);
  const int base = SolveSp(g, options);
  const int odot = SolveSp(Odot(g, v), options);
  const int contract = SolveSp(ContractClique(g, v).graph, options);
  TheoremReport report("C_combined");
  report.AddLeg(
      "gamma_sp(G) >= (gamma_sp(G odot v) + gamma_sp(G/v))/2 - floor(deg/2) "
      "+ 1",
      base, kGe, Rational(odot + contract, 2) - (degree / 2) + 1);
  report.witness["gamma_sp_G"] = base;
  report.witness["gamma_sp_odot"] = odot;
  report.witness["gamma_sp_contract"] = contract;
  return report;
}

TheoremReport CheckUnion(const Graph& g, const Graph& h,
                         const VerifierOptions& options) {
  const int a = SolveSp(g, options);
  const int b = SolveSp(h, options);
  const int whole = SolveSp(DisjointUnion(g, h).graph, options);
  TheoremReport report("P_union");
  report.AddLeg("gamma_sp(G + H) == gamma_sp(G) + gamma_sp(H)", whole, kEq,
                a + b);
  report.witness["part_values"] = {a, b};
  return report;
}

TheoremReport CheckChain2(const AttachPart& first, const AttachPart& second,
                          const VerifierOptions& options) {
  const std::vector<AttachPart> parts = {first, second};
  RequireConnectedParts(parts);
  const CompositionResult chain = Chain(parts);
  const SuperDomCertificate s1 = GammaSp(first.graph, options.solver);
  const SuperDomCertificate s2 = GammaSp(second.graph, options.solver);
  const SuperDomCertificate whole = GammaSp(chain.graph, options.solver);
  const int sum = s1.value + s2.value;

  TheoremReport report("T_chain2");
  report.AddLeg("sum - 1 <= gamma_sp(C)", sum - 1, kLe, whole.value);
  report.AddLeg("gamma_sp(C) <= sum", whole.value, kLe, sum);
  report.witness["part_values"] = {s1.value, s2.value};
  report.witness["gamma_sp_chain"] = CertificateJson(whole);

  const Vertex y1 = first.y;
  const Vertex x2 = second.x;
  const Vertex g1 = PrivateOutsideNeighbor(first.graph, s1.set, y1);
  const Vertex g2 = PrivateOutsideNeighbor(second.graph, s2.set, x2);
  const bool case_applies =
      s1.set.contains(y1) && s2.set.contains(x2) && g1 >= 0 && g2 >= 0;
  if (case_applies) {
    const auto& map1 = chain.vertex_maps[0];
    const auto& map2 = chain.vertex_maps[1];
    std::vector<Vertex> members;
    for (Vertex u : s1.set.Without(y1).With(g1).Members()) {
      members.push_back(map1[u]);
    }
    for (Vertex u : s2.set.Without(x2).Members()) members.push_back(map2[u]);
    members.push_back(chain.merged[0]);
    const VertexSet built = VertexSet::Of(chain.graph.order(), members);
    report.AddClaim(
        "upper-bound construction (S1 + S2 + {z, g1}) - {y1, x2} is super "
        "dominating with size sum",
        built.size() == sum && IsSuperDominating(chain.graph, built));
    report.witness["construction_set"] = built.Members();
  }
  return report;
}

TheoremReport CheckChainN(const std::vector<AttachPart>& parts,
                          const VerifierOptions& options) {
  RequireConnectedParts(parts);
  const CompositionResult chain = Chain(parts);
  TheoremReport report("C_chain_n");
  const int sum = SumOfParts(parts, options, report);
  const SuperDomCertificate whole = GammaSp(chain.graph, options.solver);
  const int n = static_cast<int>(parts.size());
  report.AddLeg("sum - n <= gamma_sp(C)", sum - n, kLe, whole.value);
  report.AddLeg("gamma_sp(C) <= sum", whole.value, kLe, sum);
  report.witness["gamma_sp_chain"] = CertificateJson(whole);
  return report;
}

TheoremReport CheckBouquet(const std::vector<AttachPart>& parts,
                           const VerifierOptions& options) {
  RequireConnectedParts(parts);
  const CompositionResult bouquet = Bouquet(parts);
  const int n = static_cast<int>(parts.size());
  TheoremReport report(n == 2 ? "P_bouquet2"
                       : n == 3 ? "T_bouquet3"
                                : "C_bouquet_n");
  const int sum = SumOfParts(parts, options, report);
  const SuperDomCertificate whole = GammaSp(bouquet.graph, options.solver);
  report.AddLeg("sum - " + Str(n - 1) + " <= gamma_sp(B)", sum - n + 1, kLe,
                whole.value);
  report.AddLeg("gamma_sp(B) <= sum", whole.value, kLe, sum);
  report.witness["gamma_sp_bouquet"] = CertificateJson(whole);
  return report;
}

TheoremReport CheckOdotSharpness(int n, const VerifierOptions& options) {
  const Graph friendship = FriendshipGraph(n);
  const Graph after = Odot(friendship, 0);
  const int base = SolveSp(friendship, options);
  const int value = SolveSp(after, options);
  const int degree = friendship.Degree(0);
  TheoremReport report("R_odot_sharp");
  report.instance = {{"family", "friendship"}, {"params", {n}}, {"v", 0}};
  report.AddClaim("F_n odot center is isomorphic to K_{1,2n}",
                  IsIsomorphic(after, StarGraph(2 * n), options.isomorphism));
  report.AddLeg("gamma_sp(F_n odot center) == 2n", value, kEq, 2 * n);
  report.AddLeg("gamma_sp(F_n odot center) == gamma_sp(F_n) + floor(deg/2) - 1",
                value, kEq, base + degree / 2 - 1);
  return report;
}

TheoremReport CheckChainSharpUpper(const VerifierOptions& options) {
  const std::vector<AttachPart> parts = {{PathGraph(3), 1, 1},
                                         {PathGraph(3), 1, 1}};
  const Graph composed = Chain(parts).graph;
  const int a = SolveSp(parts[0].graph, options);
  const int b = SolveSp(parts[1].graph, options);
  const int value = SolveSp(composed, options);
  TheoremReport report("R_chain_sharp_upper");
  report.instance = {{"parts", {"path(3)@1", "path(3)@1"}}};
  report.AddClaim("C(P_3, P_3) is isomorphic to K_{1,4}",
                  IsIsomorphic(composed, StarGraph(4), options.isomorphism));
  report.AddLeg("gamma_sp(C) == 4", value, kEq, 4);
  report.AddLeg("gamma_sp(C) == sum", value, kEq, a + b);
  return report;
}

TheoremReport CheckChainSharpLower(const VerifierOptions& options) {
  const std::vector<AttachPart> parts = {{FriendshipGraph(4), 0, 0},
                                         {FriendshipGraph(5), 0, 0}};
  const Graph composed = Chain(parts).graph;
  const int a = SolveSp(parts[0].graph, options);
  const int b = SolveSp(parts[1].graph, options);
  const int value = SolveSp(composed, options);
  TheoremReport report("R_chain_sharp_lower");
  report.instance = {{"parts", {"friendship(4)@0", "friendship(5)@0"}}};
  report.AddClaim(
      "C(F_4, F_5) is isomorphic to F_9",
      IsIsomorphic(composed, FriendshipGraph(9), options.isomorphism));
  report.AddLeg("gamma_sp(C) == 10", value, kEq, 10);
  report.AddLeg("gamma_sp(C) == sum - 1", value, kEq, a + b - 1);
  return report;
}

TheoremReport CheckBouquetSharpLower(int n, const VerifierOptions& options) {
  const std::vector<AttachPart> parts(n, AttachPart{FriendshipGraph(2), 0, 0});
  const Graph composed = Bouquet(parts).graph;
  TheoremReport report("R_bouquet_sharp_lower");
  report.instance = {{"copies", n}, {"part", "friendship(2)@0"}};
  const int sum = SumOfParts(parts, options, report);
  const int value = SolveSp(composed, options);
  report.AddClaim(
      "B(F_2, ..., F_2) is isomorphic to F_2n",
      IsIsomorphic(composed, FriendshipGraph(2 * n), options.isomorphism));
  report.AddLeg("gamma_sp(B) == 2n + 1", value, kEq, 2 * n + 1);
  report.AddLeg("gamma_sp(B) == sum - n + 1", value, kEq, sum - n + 1);
  return report;
}

TheoremReport CheckBouquetSharpUpper(int n, const VerifierOptions& options) {
  const std::vector<AttachPart> parts(n, AttachPart{PathGraph(2), 0, 0});
  const Graph composed = Bouquet(parts).graph;
  TheoremReport report("R_bouquet_sharp_upper");
  report.instance = {{"copies", n}, {"part", "path(2)@0"}};
  const int sum = SumOfParts(parts, options, report);
  const int value = SolveSp(composed, options);
  report.AddClaim("B(P_2, ..., P_2) is isomorphic to K_{1,n}",
                  IsIsomorphic(composed, StarGraph(n), options.isomorphism));
  report.AddLeg("gamma_sp(B) == n", value, kEq, n);
  report.AddLeg("gamma_sp(B) == sum", value, kEq, sum);
  return report;
}

}  // namespace sdom
