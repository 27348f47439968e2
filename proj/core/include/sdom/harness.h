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

#ifndef SDOM_HARNESS_H_
#define SDOM_HARNESS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdom/families.h"
#include "sdom/operations.h"
#include "sdom/rational.h"
#include "sdom/theorem_report.h"

namespace sdom {

struct RandomGrid {
  int n_min = 4;
  int n_max = 12;
  std::vector<Rational> p = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::uint64_t seed = 20260101;
  int samples = 200;
};

struct CompositionGrid {
  int part_n_min = 2;
  int part_n_max = 6;
  std::vector<Rational> p = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::uint64_t seed = 20260202;
  int samples = 100;
};

// Harness configuration, read from JSON:
//
//   {
//     "theorems": ["T1", "T2i", ...],       // default: none
//     "guard_n": 24,
//     "families": {"max_n": 12},
//     "random": {"n_min": 4, "n_max": 12, "p": ["1/4", "1/2", "3/4"],
//                "seed": 20260101, "samples": 200},
//     "compositions": {"part_n_min": 2, "part_n_max": 6,
//                      "p": ["1/4", "1/2", "3/4"], "seed": 20260202,
//                      "samples": 100},
//     "union_pairs": 50
//   }
//
// Every key is optional; unknown keys are rejected.
struct HarnessConfig {
  std::vector<std::string> theorems;
  int guard_n = 24;
  int family_max_n = 12;
  RandomGrid random;
  CompositionGrid compositions;
  int union_pairs = 50;

  // All theorem ids over the default grids.
  static HarnessConfig Default();
  // Throws ParseError on unknown keys, bad types, unknown theorem ids or
  // out-of-range values.
  static HarnessConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

struct TheoremCounts {
  int holds = 0;
  int violated = 0;
  int skipped = 0;
};

struct HarnessResult {
  std::vector<TheoremReport> reports;  // sorted by theorem id, instance key
  std::map<std::string, TheoremCounts> summary;
  bool all_hold = true;

  // {"reports": [...], "summary": {"all_hold": b, "total": {...},
  //  "theorems": {"T1": {...}, ...}}}
  nlohmann::json ToJson() const;
};

// Every family instance of order <= max_order (path and complete from 1,
// cycle from 3, complete bipartite, star, friendship).
std::vector<GraphFamily> FamilyPool(int max_order);

// Instance i: p = grid.p[i % |p|], n = n_min + (i / |p|) mod (n_max - n_min + 1),
// seed = SplitMix64(grid.seed, i).
std::vector<GraphFamily> RandomPool(const RandomGrid& grid);

// A connected attach part, described by its family parameters.
struct RandomPart {
  GraphFamily family;
  AttachPart part;
};

// `count` connected G(n, p) parts drawn for sample `sample` of `stream`;
// rejection sampling on connectivity with counter-derived seeds, attach
// vertices drawn from the same stream.
std::vector<RandomPart> RandomConnectedParts(const CompositionGrid& grid,
                                             std::uint64_t stream, int sample,
                                             int count);

nlohmann::json DescribeParts(const std::vector<RandomPart>& parts, bool chain);

HarnessResult RunHarness(const HarnessConfig& config);

}  // namespace sdom

#endif  // SDOM_HARNESS_H_
