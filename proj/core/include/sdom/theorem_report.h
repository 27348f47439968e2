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

#ifndef SDOM_THEOREM_REPORT_H_
#define SDOM_THEOREM_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdom/rational.h"

namespace sdom {

// Identifiers of the encoded results, in report order.
inline constexpr std::string_view kTheoremIds[] = {
    "T1",
    "T2i",
    "T2ii",
    "T2iii",
    "T2iv",
    "T2v",
    "T_Fn",
    "P_odot_pendant",
    "T_odot",
    "T_Gv",
    "C_combined",
    "P_union",
    "T_chain2",
    "C_chain_n",
    "P_bouquet2",
    "T_bouquet3",
    "C_bouquet_n",
    "R_odot_sharp",
    "R_chain_sharp_upper",
    "R_chain_sharp_lower",
    "R_bouquet_sharp_lower",
    "R_bouquet_sharp_upper",
};

// Position of `id` in kTheoremIds, or -1.
int TheoremRank(std::string_view id);

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

std::string_view RelationSymbol(Relation relation);

// One evaluated (in)equality "lhs op rhs".
struct BoundLeg {
  std::string label;
  Rational lhs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  bool holds = false;
};

// A non-numeric claim, e.g. an isomorphism or a proof-construction check.
struct ClaimCheck {
  std::string label;
  bool holds = false;
};

// Pass/fail record for one result on one instance. `holds` is the conjunction
// of every leg and claim; a skipped report has neither and holds vacuously.
struct TheoremReport {
  std::string theorem_id;
  // Sort key inside one theorem id; set by the harness.
  std::string instance_key;
  // Replayable instance parameters (families, seeds, attach vertices).
  nlohmann::json instance = nlohmann::json::object();
  std::vector<BoundLeg> legs;
  std::vector<ClaimCheck> claims;
  // Certificates backing the evaluated sides.
  nlohmann::json witness = nlohmann::json::object();
  std::optional<std::string> skipped;
  bool holds = true;

  explicit TheoremReport(std::string id) : theorem_id(std::move(id)) {}

  void AddLeg(std::string label, Rational lhs, Relation relation,
              Rational rhs);
  void AddClaim(std::string label, bool ok);
  void Skip(std::string reason);

  nlohmann::json ToJson() const;
};

// Sorts by theorem rank, then instance key.
void SortReports(std::vector<TheoremReport>& reports);

}  // namespace sdom

#endif  // SDOM_THEOREM_REPORT_H_
