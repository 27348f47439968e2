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

#include "sdom/harness.h"

#include <set>

#include "gtest/gtest.h"
#include "sdom/errors.h"
#include "sdom/verifier.h"

namespace sdom {
namespace {

HarnessConfig Only(std::vector<std::string> ids) {
  HarnessConfig config = HarnessConfig::Default();
  config.theorems = std::move(ids);
  return config;
}

TEST(HarnessConfigTest, DefaultEnablesEveryTheorem) {
  const HarnessConfig config = HarnessConfig::Default();
  EXPECT_EQ(config.theorems.size(), std::size(kTheoremIds));
  EXPECT_EQ(config.random.samples, 200);
  EXPECT_EQ(config.family_max_n, 12);
}

TEST(HarnessConfigTest, JsonRoundTrip) {
  HarnessConfig config = Only({"T2i", "P_union"});
  config.random.p = {Rational(1, 3)};
  config.random.seed = 99;
  config.union_pairs = 7;
  const HarnessConfig back = HarnessConfig::FromJson(config.ToJson());
  EXPECT_EQ(back.ToJson(), config.ToJson());
  EXPECT_EQ(back.random.p, std::vector<Rational>{Rational(1, 3)});
}

TEST(HarnessConfigTest, PartialJsonKeepsDefaults) {
  const HarnessConfig config = HarnessConfig::FromJson(
      nlohmann::json::parse(R"({"theorems": ["T1"], "random": {"samples": 3}})"));
  EXPECT_EQ(config.theorems, std::vector<std::string>{"T1"});
  EXPECT_EQ(config.random.samples, 3);
  EXPECT_EQ(config.random.n_max, 12);
  EXPECT_EQ(config.guard_n, 24);
}

TEST(HarnessConfigTest, Errors) {
  const char* bad[] = {
      R"({"theorem": ["T1"]})",
      R"({"theorems": ["T9"]})",
      R"({"theorems": "T1"})",
      R"({"guard_n": 0})",
      R"({"random": {"n_min": 5, "n_max": 4}})",
      R"({"random": {"p": ["3/2"]}})",
      R"({"random": {"p": ["x"]}})",
      R"({"random": {"size": 3}})",
      R"({"compositions": {"p": ["0"]}})",
      R"({"union_pairs": -1})",
      R"([])",
  };
  for (const char* text : bad) {
    EXPECT_THROW(HarnessConfig::FromJson(nlohmann::json::parse(text)),
                 ParseError)
        << text;
  }
}

TEST(PoolTest, RandomPoolFollowsGrid) {
  const std::vector<GraphFamily> pool = RandomPool(RandomGrid{});
  ASSERT_EQ(pool.size(), 200u);
  std::set<int> orders;
  std::set<std::uint64_t> seeds;
  for (size_t i = 0; i < pool.size(); ++i) {
    EXPECT_EQ(pool[i].kind, FamilyKind::kGnp);
    EXPECT_EQ(pool[i].p, RandomGrid{}.p[i % 3]);
    orders.insert(pool[i].params[0]);
    seeds.insert(pool[i].seed);
  }
  EXPECT_EQ(*orders.begin(), 4);
  EXPECT_EQ(*orders.rbegin(), 12);
  EXPECT_EQ(orders.size(), 9u);
  EXPECT_EQ(seeds.size(), pool.size());
}

TEST(PoolTest, FamilyPoolRespectsOrder) {
  for (const auto& family : FamilyPool(12)) {
    EXPECT_LE(Generate(family).graph.order(), 12) << family.ToString();
  }
}

TEST(PoolTest, RandomPartsAreConnected) {
  const CompositionGrid grid;
  for (int sample = 0; sample < 20; ++sample) {
    const std::vector<RandomPart> parts = RandomConnectedParts(grid, 1, sample, 3);
    ASSERT_EQ(parts.size(), 3u);
    for (const auto& part : parts) {
      EXPECT_TRUE(part.part.graph.IsConnected());
      EXPECT_GE(part.part.graph.order(), grid.part_n_min);
      EXPECT_LE(part.part.graph.order(), grid.part_n_max);
      EXPECT_LT(part.part.x, part.part.graph.order());
      EXPECT_LT(part.part.y, part.part.graph.order());
    }
  }
}

TEST(HarnessTest, EmptyTheoremListGivesEmptyReport) {
  const HarnessResult result = RunHarness(HarnessConfig::FromJson(nlohmann::json::object()));
  EXPECT_TRUE(result.reports.empty());
  EXPECT_TRUE(result.all_hold);
  EXPECT_EQ(result.ToJson().at("summary").at("total").at("holds"), 0);
}

TEST(HarnessTest, ClosedFormsOnlyHaveNoFailures) {
  const HarnessResult result =
      RunHarness(Only({"T2i", "T2ii", "T2iii", "T2iv", "T2v"}));
  EXPECT_TRUE(result.all_hold);
  EXPECT_FALSE(result.reports.empty());
  for (const auto& [id, counts] : result.summary) {
    EXPECT_EQ(counts.violated, 0) << id;
    EXPECT_GT(counts.holds, 0) << id;
  }
}

TEST(HarnessTest, ReportsAreSortedAndReplayable) {
  HarnessConfig config = Only({"T2ii", "T1", "P_union"});
  config.random.samples = 20;
  config.union_pairs = 5;
  const HarnessResult result = RunHarness(config);
  for (size_t i = 1; i < result.reports.size(); ++i) {
    const auto& a = result.reports[i - 1];
    const auto& b = result.reports[i];
    const int ra = TheoremRank(a.theorem_id);
    const int rb = TheoremRank(b.theorem_id);
    EXPECT_TRUE(ra < rb || (ra == rb && a.instance_key < b.instance_key));
  }
  for (const auto& report : result.reports) {
    if (report.theorem_id != "T2ii") continue;
    const auto& instance = report.instance;
    GraphFamily family = GraphFamily::Cycle(instance.at("params").at(0));
    EXPECT_EQ(CheckClosedForm(family).ToJson(), [&] {
      nlohmann::json j = report.ToJson();
      j["instance_key"] = "";
      return j;
    }());
  }
}

TEST(HarnessTest, SummaryCountsMatchReports) {
  HarnessConfig config = Only({"T_odot", "T_Gv", "C_combined", "P_odot_pendant"});
  config.random.samples = 30;
  config.family_max_n = 6;
  const HarnessResult result = RunHarness(config);
  int total = 0;
  for (const auto& [id, counts] : result.summary) {
    total += counts.holds + counts.violated + counts.skipped;
  }
  EXPECT_EQ(total, static_cast<int>(result.reports.size()));
  EXPECT_TRUE(result.all_hold);
}

TEST(HarnessTest, Deterministic) {
  HarnessConfig config = HarnessConfig::Default();
  config.random.samples = 30;
  config.compositions.samples = 10;
  config.union_pairs = 10;
  config.family_max_n = 8;
  EXPECT_EQ(RunHarness(config).ToJson().dump(),
            RunHarness(config).ToJson().dump());
}

}  // namespace
}  // namespace sdom
