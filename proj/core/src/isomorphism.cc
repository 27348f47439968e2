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

#include "sdom/isomorphism.h"

#include <algorithm>
#include <map>
#include <utility>

#include "sdom/errors.h"

namespace sdom {
namespace {

using Coloring = std::vector<int>;

// Joint color refinement of g and h. Colors are assigned from one shared
// signature table, so equal colors mean equal refinement histories.
std::pair<Coloring, Coloring> RefineColors(const Graph& g, const Graph& h) {
  Coloring cg(g.order()), ch(h.order());
  for (Vertex v = 0; v < g.order(); ++v) cg[v] = g.Degree(v);
  for (Vertex v = 0; v < h.order(); ++v) ch[v] = h.Degree(v);

  int classes = -1;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> table;
    auto signature = [](const Graph& graph, const Coloring& colors,
                        Vertex v) {
      std::vector<int> around;
      for (Vertex w : graph.Neighbors(v).Members()) around.push_back(colors[w]);
      std::sort(around.begin(), around.end());
      return Signature(colors[v], std::move(around));
    };
    std::vector<Signature> sg, sh;
    for (Vertex v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
    for (Vertex v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
    for (const auto& s : sg) table.emplace(s, 0);
    for (const auto& s : sh) table.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (Vertex v = 0; v < g.order(); ++v) cg[v] = table[sg[v]];
    for (Vertex v = 0; v < h.order(); ++v) ch[v] = table[sh[v]];
    if (next == classes) break;
    classes = next;
  }
  return {std::move(cg), std::move(ch)};
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, Coloring cg, Coloring ch)
      : n_(g.order()),
        cg_(std::move(cg)),
        ch_(std::move(ch)),
        adj_g_(n_, std::vector<bool>(n_, false)),
        adj_h_(n_, std::vector<bool>(n_, false)),
        map_(n_, -1),
        used_(n_, false) {
    for (const auto& [u, v] : g.Edges()) adj_g_[u][v] = adj_g_[v][u] = true;
    for (const auto& [u, v] : h.Edges()) adj_h_[u][v] = adj_h_[v][u] = true;
    BuildOrder();
  }

  std::optional<std::vector<Vertex>> Run() {
    if (Extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Most-constrained-first: the next vertex has the most already-ordered
  // neighbors, ties broken by smaller color class, then by index.
  void BuildOrder() {
    std::map<int, int> class_size;
    for (int c : cg_) ++class_size[c];
    std::vector<bool> placed(n_, false);
    std::vector<int> placed_neighbors(n_, 0);
    for (int step = 0; step < n_; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] &&
             class_size[cg_[v]] < class_size[cg_[best]])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w = 0; w < n_; ++w) {
        if (adj_g_[best][w]) ++placed_neighbors[w];
      }
    }
  }

  bool Extend(int depth) {
    if (depth == n_) return true;
    const Vertex u = order_[depth];
    for (Vertex candidate = 0; candidate < n_; ++candidate) {
      if (used_[candidate] || ch_[candidate] != cg_[u]) continue;
      bool consistent = true;
      for (int i = 0; i < depth && consistent; ++i) {
        const Vertex w = order_[i];
        consistent = adj_g_[u][w] == adj_h_[candidate][map_[w]];
      }
      if (!consistent) continue;
      map_[u] = candidate;
      used_[candidate] = true;
      if (Extend(depth + 1)) return true;
      used_[candidate] = false;
      map_[u] = -1;
    }
    return false;
  }

  int n_;
  Coloring cg_, ch_;
  std::vector<std::vector<bool>> adj_g_, adj_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> FindIsomorphism(
    const Graph& g, const Graph& h, const IsomorphismOptions& options) {
  const int larger = std::max(g.order(), h.order());
  if (larger > options.max_order) {
    throw GuardExceededError("isomorphism check", larger, options.max_order);
  }
  if (g.order() != h.order() || g.size() != h.size() ||
      g.DegreeSequence() != h.DegreeSequence()) {
    return std::nullopt;
  }
  auto [cg, ch] = RefineColors(g, h);
  std::vector<int> hist_g = cg, hist_h = ch;
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return std::nullopt;
  return Matcher(g, h, std::move(cg), std::move(ch)).Run();
}

bool IsIsomorphic(const Graph& g, const Graph& h,
                  const IsomorphismOptions& options) {
  return FindIsomorphism(g, h, options).has_value();
}

}  // namespace sdom
