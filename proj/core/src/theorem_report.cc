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

#include "sdom/theorem_report.h"

#include <algorithm>
#include <utility>

namespace sdom {
namespace {

nlohmann::json RationalJson(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.ToString();
}

}  // namespace

int TheoremRank(std::string_view id) {
  for (size_t i = 0; i < std::size(kTheoremIds); ++i) {
    if (kTheoremIds[i] == id) return static_cast<int>(i);
  }
  return -1;
}

std::string_view RelationSymbol(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "==";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

void TheoremReport::AddLeg(std::string label, Rational lhs, Relation relation,
                           Rational rhs) {
  bool ok = false;
  switch (relation) {
    case Relation::kLessEqual:
      ok = lhs <= rhs;
      break;
    case Relation::kEqual:
      ok = lhs == rhs;
      break;
    case Relation::kGreaterEqual:
      ok = lhs >= rhs;
      break;
  }
  legs.push_back({std::move(label), lhs, relation, rhs, ok});
  holds = holds && ok;
}

void TheoremReport::AddClaim(std::string label, bool ok) {
  claims.push_back({std::move(label), ok});
  holds = holds && ok;
}

void TheoremReport::Skip(std::string reason) { skipped = std::move(reason); }

nlohmann::json TheoremReport::ToJson() const {
  nlohmann::json j;
  j["theorem_id"] = theorem_id;
  j["instance_key"] = instance_key;
  j["instance"] = instance;
  j["holds"] = holds;
  auto& legs_json = j["legs"] = nlohmann::json::array();
  for (const auto& leg : legs) {
    legs_json.push_back({{"label", leg.label},
                         {"lhs", RationalJson(leg.lhs)},
                         {"op", RelationSymbol(leg.relation)},
                         {"rhs", RationalJson(leg.rhs)},
                         {"holds", leg.holds}});
  }
  auto& claims_json = j["claims"] = nlohmann::json::array();
  for (const auto& claim : claims) {
    claims_json.push_back({{"label", claim.label}, {"holds", claim.holds}});
  }
  j["witness"] = witness;
  j["skipped"] = skipped ? nlohmann::json(*skipped) : nlohmann::json(nullptr);
  return j;
}

void SortReports(std::vector<TheoremReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const TheoremReport& a, const TheoremReport& b) {
                     const int ra = TheoremRank(a.theorem_id);
                     const int rb = TheoremRank(b.theorem_id);
                     if (ra != rb) return ra < rb;
                     return a.instance_key < b.instance_key;
                   });
}

}  // namespace sdom
