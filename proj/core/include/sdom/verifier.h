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

#ifndef SDOM_VERIFIER_H_
#define SDOM_VERIFIER_H_

#include <optional>
#include <vector>

#include "sdom/families.h"
#include "sdom/graph.h"
#include "sdom/isomorphism.h"
#include "sdom/operations.h"
#include "sdom/solver.h"
#include "sdom/theorem_report.h"

namespace sdom {

struct VerifierOptions {
  SolverOptions solver;
  IsomorphismOptions isomorphism{.max_order = 24};
};

// Executable encodings of the bounds. Each check solves every graph it needs
// exactly and records both sides of every (in)equality; nothing is assumed
// from a closed form unless the check is about that closed form.

// T1: 1 <= gamma <= n/2 <= gamma_sp <= n-1. Throws InvalidArgumentError on a
// graph without edges.
TheoremReport CheckSandwich(const Graph& g, const VerifierOptions& options = {});

// Closed-form value of gamma_sp for a family instance inside the domain of
// the corresponding result, or nullopt outside it (path n < 3, complete
// n < 2, complete bipartite min(n, m) < 2, gnp).
std::optional<int> ClosedFormGammaSp(const GraphFamily& family);

// "T2i" .. "T2v" and "T_Fn" by family; empty for gnp.
std::string_view ClosedFormTheoremId(FamilyKind kind);

// T2i..T2v, T_Fn for one instance. Throws InvalidArgumentError when the
// instance is outside the result's domain.
TheoremReport CheckClosedForm(const GraphFamily& family,
                              const VerifierOptions& options = {});

// Every family instance of order <= max_order inside its result's domain.
std::vector<GraphFamily> ClosedFormGrid(int max_order);
std::vector<TheoremReport> CheckClosedForms(int max_order,
                                            const VerifierOptions& options = {});

// P_odot_pendant (equality) when v is pendant, otherwise T_odot:
// gamma_sp(G odot v) <= gamma_sp(G) + floor(deg(v)/2) - 1. The bound is stated
// for non-pendant v and its argument starts from deg(v) >= 2, so an isolated
// v yields a skipped T_odot report.
TheoremReport CheckOdot(const Graph& g, Vertex v,
                        const VerifierOptions& options = {});

// T_Gv: gamma_sp(G/v) <= gamma_sp(G) + floor(deg(v)/2) - 1. Skipped when
// deg(v) < 2.
TheoremReport CheckContract(const Graph& g, Vertex v,
                            const VerifierOptions& options = {});

// C_combined: gamma_sp(G) >= (gamma_sp(G odot v) + gamma_sp(G/v)) / 2
//                            - floor(deg(v)/2) + 1,
// in exact rational arithmetic. Skipped when deg(v) < 2.
TheoremReport CheckCombinedCorollary(const Graph& g, Vertex v,
                                     const VerifierOptions& options = {});

// P_union: gamma_sp(G + H) == gamma_sp(G) + gamma_sp(H).
TheoremReport CheckUnion(const Graph& g, const Graph& h,
                         const VerifierOptions& options = {});

// T_chain2 on C(G1, G2) joined at first.y and second.x:
//   sum - 1 <= gamma_sp(C) <= sum.
// Also rebuilds the upper-bound construction for the case where both
// certificates keep the attach vertex and each attach vertex privately
// witnesses exactly one neighbor g1 / g2:
//   S = (S1 ∪ S2 ∪ {z, g1}) - {y1, x2}
// and checks that S is super dominating of size sum. The claim is only added
// when the solver's certificates meet that case. Throws InvalidArgumentError
// on a disconnected part.
TheoremReport CheckChain2(const AttachPart& first, const AttachPart& second,
                          const VerifierOptions& options = {});

// C_chain_n: sum - n <= gamma_sp(C(G_1..G_n)) <= sum.
TheoremReport CheckChainN(const std::vector<AttachPart>& parts,
                          const VerifierOptions& options = {});

// Bouquet sandwich sum - n + 1 <= gamma_sp(B) <= sum, reported as
// P_bouquet2 / T_bouquet3 / C_bouquet_n by part count.
TheoremReport CheckBouquet(const std::vector<AttachPart>& parts,
                           const VerifierOptions& options = {});

// Sharpness witnesses; every leg is an equality.
// R_odot_sharp: F_n odot center ≅ K_{1,2n}, gamma_sp = 2n
//               = gamma_sp(F_n) + floor(2n/2) - 1.
TheoremReport CheckOdotSharpness(int n, const VerifierOptions& options = {});
// R_chain_sharp_upper: C(P_3, P_3) at the middle vertices ≅ K_{1,4}, value 4.
TheoremReport CheckChainSharpUpper(const VerifierOptions& options = {});
// R_chain_sharp_lower: C(F_4, F_5) at the centers ≅ F_9, value 10. Needs a
// solver and isomorphism guard of at least 19.
TheoremReport CheckChainSharpLower(const VerifierOptions& options = {});
// R_bouquet_sharp_lower: B(F_2 x n) at centers ≅ F_{2n}, value 2n + 1.
TheoremReport CheckBouquetSharpLower(int n,
                                     const VerifierOptions& options = {});
// R_bouquet_sharp_upper: B(P_2 x n) ≅ K_{1,n}, value n.
TheoremReport CheckBouquetSharpUpper(int n,
                                     const VerifierOptions& options = {});

// Certificate as {"value", "set", "witnesses"} JSON, witness keys as strings.
nlohmann::json CertificateJson(const SuperDomCertificate& cert);
nlohmann::json CertificateJson(const DomCertificate& cert);

}  // namespace sdom

#endif  // SDOM_VERIFIER_H_
