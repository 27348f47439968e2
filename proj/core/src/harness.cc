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

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "sdom/errors.h"
#include "sdom/verifier.h"

namespace sdom {
namespace {

constexpr int kMaxAttempts = 1 << 16;

nlohmann::json ProbabilityList(const std::vector<Rational>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : ps) out.push_back(p.ToString());
  return out;
}

std::vector<Rational> ParseProbabilities(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("\"p\" must be a non-empty array of rationals");
  }
  std::vector<Rational> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("probabilities are strings like \"1/4\"");
    const Rational p = Rational::Parse(item.get<std::string>());
    if (p < Rational(0) || p > Rational(1)) {
      throw ParseError("probability " + p.ToString() + " outside [0, 1]");
    }
    out.push_back(p);
  }
  return out;
}

void RejectUnknownKeys(const nlohmann::json& j,
                       std::initializer_list<std::string_view> known,
                       const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParseError("unknown key \"" + key + "\" in " + where);
    }
  }
}

template <typename T>
void ReadField(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("bad value for \"") + key + "\"");
  }
}

std::string Ordinal(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d", i);
  return buf;
}

class Runner {
 public:
  explicit Runner(const HarnessConfig& config) : config_(config) {
    options_.solver.max_order = config.guard_n;
    options_.isomorphism.max_order = config.guard_n;
    enabled_.insert(config.theorems.begin(), config.theorems.end());
  }

  HarnessResult Run() {
    std::vector<GraphFamily> pool;
    for (const auto& f : FamilyPool(std::min(config_.family_max_n,
                                             config_.guard_n))) {
      pool.push_back(f);
    }
    const std::vector<GraphFamily> random = RandomPool(config_.random);
    for (const auto& f : random) {
      if (f.params[0] <= config_.guard_n) pool.push_back(f);
    }

    RunSandwich(pool);
    RunClosedForms();
    RunVertexChecks(pool);
    RunUnions(random);
    RunCompositions();
    RunSharpness();

    HarnessResult result;
    result.reports = std::move(reports_);
    SortReports(result.reports);
    for (const auto& r : result.reports) {
      auto& counts = result.summary[r.theorem_id];
      if (r.skipped) {
        ++counts.skipped;
      } else if (r.holds) {
        ++counts.holds;
      } else {
        ++counts.violated;
        result.all_hold = false;
      }
    }
    return result;
  }

 private:
  bool Enabled(std::string_view id) const {
    return enabled_.count(std::string(id)) > 0;
  }

  void Emit(TheoremReport report, nlohmann::json instance,
            const std::string& label) {
    report.instance = std::move(instance);
    report.instance_key = Ordinal(next_++) + " " + label;
    reports_.push_back(std::move(report));
  }

  void RunSandwich(const std::vector<GraphFamily>& pool) {
    if (!Enabled("T1")) return;
    for (const auto& family : pool) {
      const Graph g = Generate(family).graph;
      if (g.size() == 0) continue;
      Emit(CheckSandwich(g, options_), family.ToJson(), family.ToString());
    }
  }

  void RunClosedForms() {
    for (const auto& family : ClosedFormGrid(
             std::min(config_.family_max_n, config_.guard_n))) {
      if (!Enabled(ClosedFormTheoremId(family.kind))) continue;
      Emit(CheckClosedForm(family, options_), family.ToJson(),
           family.ToString());
    }
  }

  void RunVertexChecks(const std::vector<GraphFamily>& pool) {
    const bool pendant = Enabled("P_odot_pendant");
    const bool odot = Enabled("T_odot");
    const bool contract = Enabled("T_Gv");
    const bool combined = Enabled("C_combined");
    if (!pendant && !odot && !contract && !combined) return;
    for (const auto& family : pool) {
      const Graph g = Generate(family).graph;
      for (Vertex v = 0; v < g.order(); ++v) {
        nlohmann::json instance = family.ToJson();
        instance["v"] = v;
        const std::string label = family.ToString() + "@" + std::to_string(v);
        const int degree = g.Degree(v);
        if (degree == 1) {
          if (pendant) Emit(CheckOdot(g, v, options_), instance, label);
          continue;
        }
        if (odot) Emit(CheckOdot(g, v, options_), instance, label);
        if (contract) Emit(CheckContract(g, v, options_), instance, label);
        if (combined) {
          Emit(CheckCombinedCorollary(g, v, options_), instance, label);
        }
      }
    }
  }

  void RunUnions(const std::vector<GraphFamily>& random) {
    if (!Enabled("P_union")) return;
    int emitted = 0;
    for (size_t i = 0; i + 1 < random.size() && emitted < config_.union_pairs;
         i += 2) {
      const Graph g = Generate(random[i]).graph;
      const Graph h = Generate(random[i + 1]).graph;
      if (g.order() + h.order() > config_.guard_n) continue;
      nlohmann::json instance = {{"parts",
                                  {random[i].ToJson(), random[i + 1].ToJson()}}};
      Emit(CheckUnion(g, h, options_), instance,
           random[i].ToString() + "+" + random[i + 1].ToString());
      ++emitted;
    }
  }

  void RunCompositions() {
    struct Kind {
      std::string_view id;
      std::uint64_t stream;
      int parts;
      bool chain;
    };
    const Kind kinds[] = {{"T_chain2", 1, 2, true},
                          {"C_chain_n", 2, 3, true},
                          {"P_bouquet2", 3, 2, false},
                          {"T_bouquet3", 4, 3, false},
                          {"C_bouquet_n", 5, 4, false}};
    for (const auto& kind : kinds) {
      if (!Enabled(kind.id)) continue;
      for (int s = 0; s < config_.compositions.samples; ++s) {
        const auto drawn = RandomConnectedParts(config_.compositions,
                                                kind.stream, s, kind.parts);
        std::vector<AttachPart> parts;
        int order = 1 - kind.parts;
        for (const auto& d : drawn) {
          parts.push_back(d.part);
          order += d.part.graph.order();
        }
        nlohmann::json instance = DescribeParts(drawn, kind.chain);
        instance["sample"] = s;
        const std::string label = std::string(kind.id) + "#" +
                                  std::to_string(s);
        if (order > config_.guard_n) {
          TheoremReport skipped{std::string(kind.id)};
          skipped.Skip("composed order " + std::to_string(order) +
                       " exceeds guard");
          Emit(std::move(skipped), instance, label);
          continue;
        }
        TheoremReport report =
            kind.id == "T_chain2" ? CheckChain2(parts[0], parts[1], options_)
            : kind.chain          ? CheckChainN(parts, options_)
                                  : CheckBouquet(parts, options_);
        Emit(std::move(report), instance, label);
      }
    }
  }

  void RunSharpness() {
    if (Enabled("R_odot_sharp")) {
      for (int n = 2; n <= 5 && 2 * n + 1 <= config_.guard_n; ++n) {
        TheoremReport r = CheckOdotSharpness(n, options_);
        auto instance = r.instance;
        Emit(std::move(r), instance, "F_" + std::to_string(n));
      }
    }
    if (Enabled("R_chain_sharp_upper")) {
      TheoremReport r = CheckChainSharpUpper(options_);
      auto instance = r.instance;
      Emit(std::move(r), instance, "P_3.P_3");
    }
    if (Enabled("R_chain_sharp_lower")) {
      TheoremReport r("R_chain_sharp_lower");
      if (config_.guard_n >= 19) {
        r = CheckChainSharpLower(options_);
      } else {
        r.Skip("needs guard_n >= 19");
      }
      auto instance = r.instance;
      Emit(std::move(r), instance, "F_4.F_5");
    }
    if (Enabled("R_bouquet_sharp_lower")) {
      for (int n = 2; n <= 3 && 4 * n + 1 <= config_.guard_n; ++n) {
        TheoremReport r = CheckBouquetSharpLower(n, options_);
        auto instance = r.instance;
        Emit(std::move(r), instance, "F_2^" + std::to_string(n));
      }
    }
    if (Enabled("R_bouquet_sharp_upper")) {
      for (int n = 2; n <= 10 && n + 1 <= config_.guard_n; ++n) {
        TheoremReport r = CheckBouquetSharpUpper(n, options_);
        auto instance = r.instance;
        Emit(std::move(r), instance, "P_2^" + std::to_string(n));
      }
    }
  }

  const HarnessConfig& config_;
  VerifierOptions options_;
  std::set<std::string> enabled_;
  std::vector<TheoremReport> reports_;
  int next_ = 0;
};

}  // namespace

HarnessConfig HarnessConfig::Default() {
  HarnessConfig config;
  for (auto id : kTheoremIds) config.theorems.emplace_back(id);
  return config;
}

HarnessConfig HarnessConfig::FromJson(const nlohmann::json& j) {
  RejectUnknownKeys(j,
                    {"theorems", "guard_n", "families", "random",
                     "compositions", "union_pairs"},
                    "harness config");
  HarnessConfig config;
  ReadField(j, "theorems", config.theorems);
  for (const auto& id : config.theorems) {
    if (TheoremRank(id) < 0) throw ParseError("unknown theorem id \"" + id + "\"");
  }
  ReadField(j, "guard_n", config.guard_n);
  ReadField(j, "union_pairs", config.union_pairs);
  if (j.contains("families")) {
    RejectUnknownKeys(j["families"], {"max_n"}, "\"families\"");
    ReadField(j["families"], "max_n", config.family_max_n);
  }
  if (j.contains("random")) {
    const auto& r = j["random"];
    RejectUnknownKeys(r, {"n_min", "n_max", "p", "seed", "samples"},
                      "\"random\"");
    ReadField(r, "n_min", config.random.n_min);
    ReadField(r, "n_max", config.random.n_max);
    ReadField(r, "seed", config.random.seed);
    ReadField(r, "samples", config.random.samples);
    if (r.contains("p")) config.random.p = ParseProbabilities(r["p"]);
  }
  if (j.contains("compositions")) {
    const auto& c = j["compositions"];
    RejectUnknownKeys(c, {"part_n_min", "part_n_max", "p", "seed", "samples"},
                      "\"compositions\"");
    ReadField(c, "part_n_min", config.compositions.part_n_min);
    ReadField(c, "part_n_max", config.compositions.part_n_max);
    ReadField(c, "seed", config.compositions.seed);
    ReadField(c, "samples", config.compositions.samples);
    if (c.contains("p")) config.compositions.p = ParseProbabilities(c["p"]);
  }
  if (config.guard_n < 1) throw ParseError("guard_n must be >= 1");
  if (config.random.n_min < 0 || config.random.n_max < config.random.n_min) {
    throw ParseError("random grid needs 0 <= n_min <= n_max");
  }
  if (config.compositions.part_n_min < 1 ||
      config.compositions.part_n_max < config.compositions.part_n_min) {
    throw ParseError("composition grid needs 1 <= part_n_min <= part_n_max");
  }
  if (config.random.samples < 0 || config.compositions.samples < 0 ||
      config.union_pairs < 0) {
    throw ParseError("sample counts must be non-negative");
  }
  for (const auto& p : config.compositions.p) {
    if (p == Rational(0)) {
      throw ParseError("composition parts must be connected; p = 0 is not allowed");
    }
  }
  return config;
}

nlohmann::json HarnessConfig::ToJson() const {
  return {{"theorems", theorems},
          {"guard_n", guard_n},
          {"families", {{"max_n", family_max_n}}},
          {"random",
           {{"n_min", random.n_min},
            {"n_max", random.n_max},
            {"p", ProbabilityList(random.p)},
            {"seed", random.seed},
            {"samples", random.samples}}},
          {"compositions",
           {{"part_n_min", compositions.part_n_min},
            {"part_n_max", compositions.part_n_max},
            {"p", ProbabilityList(compositions.p)},
            {"seed", compositions.seed},
            {"samples", compositions.samples}}},
          {"union_pairs", union_pairs}};
}

nlohmann::json HarnessResult::ToJson() const {
  nlohmann::json out;
  auto& list = out["reports"] = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(r.ToJson());
  TheoremCounts total;
  nlohmann::json per_theorem = nlohmann::json::object();
  for (const auto& [id, counts] : summary) {
    per_theorem[id] = {{"holds", counts.holds},
                       {"violated", counts.violated},
                       {"skipped", counts.skipped}};
    total.holds += counts.holds;
    total.violated += counts.violated;
    total.skipped += counts.skipped;
  }
  out["summary"] = {{"all_hold", all_hold},
                    {"theorems", per_theorem},
                    {"total",
                     {{"holds", total.holds},
                      {"violated", total.violated},
                      {"skipped", total.skipped}}}};
  return out;
}

std::vector<GraphFamily> FamilyPool(int max_order) {
  std::vector<GraphFamily> pool;
  for (int n = 1; n <= max_order; ++n) pool.push_back(GraphFamily::Path(n));
  for (int n = 3; n <= max_order; ++n) pool.push_back(GraphFamily::Cycle(n));
  for (int n = 1; n <= max_order; ++n) pool.push_back(GraphFamily::Complete(n));
  for (int n = 1; 2 * n <= max_order; ++n) {
    for (int m = n; n + m <= max_order; ++m) {
      pool.push_back(GraphFamily::CompleteBipartite(n, m));
    }
  }
  for (int n = 1; n + 1 <= max_order; ++n) pool.push_back(GraphFamily::Star(n));
  for (int n = 1; 2 * n + 1 <= max_order; ++n) {
    pool.push_back(GraphFamily::Friendship(n));
  }
  return pool;
}

std::vector<GraphFamily> RandomPool(const RandomGrid& grid) {
  std::vector<GraphFamily> pool;
  const int span = grid.n_max - grid.n_min + 1;
  const int np = static_cast<int>(grid.p.size());
  for (int i = 0; i < grid.samples; ++i) {
    const int n = grid.n_min + (i / np) % span;
    pool.push_back(GraphFamily::Gnp(n, grid.p[i % np],
                                    SplitMix64(grid.seed, i)));
  }
  return pool;
}

std::vector<RandomPart> RandomConnectedParts(const CompositionGrid& grid,
                                             std::uint64_t stream, int sample,
                                             int count) {
  const std::uint64_t base =
      SplitMix64(SplitMix64(grid.seed, stream), static_cast<std::uint64_t>(sample));
  const int span = grid.part_n_max - grid.part_n_min + 1;
  std::vector<RandomPart> parts;
  for (int j = 0; j < count; ++j) {
    bool found = false;
    for (int attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
      const std::uint64_t h =
          SplitMix64(base, static_cast<std::uint64_t>(j) * kMaxAttempts + attempt);
      const int n = grid.part_n_min + static_cast<int>(h % span);
      const Rational p = grid.p[(h >> 32) % grid.p.size()];
      const GraphFamily family = GraphFamily::Gnp(n, p, SplitMix64(h, 0));
      Graph g = Generate(family).graph;
      if (!g.IsConnected()) continue;
      const Vertex x = static_cast<Vertex>(SplitMix64(h, 1) % n);
      const Vertex y = static_cast<Vertex>(SplitMix64(h, 2) % n);
      parts.push_back({family, AttachPart{std::move(g), x, y}});
      found = true;
    }
    if (!found) {
      throw InvalidArgumentError("could not draw a connected part");
    }
  }
  return parts;
}

nlohmann::json DescribeParts(const std::vector<RandomPart>& parts, bool chain) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : parts) {
    nlohmann::json j = p.family.ToJson();
    j["x"] = p.part.x;
    if (chain) j["y"] = p.part.y;
    out.push_back(std::move(j));
  }
  return {{"parts", out}};
}

HarnessResult RunHarness(const HarnessConfig& config) {
  return Runner(config).Run();
}

}  // namespace sdom
