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

#ifndef SDOM_ISOMORPHISM_H_
#define SDOM_ISOMORPHISM_H_

#include <optional>
#include <vector>

#include "sdom/graph.h"

namespace sdom {

struct IsomorphismOptions {
  // Largest order the backtracking search accepts. This is a small-graph
  // utility, not a canonical labeler.
  int max_order = 12;
};

// Returns a bijection `map` with {u, v} in E(g) iff {map[u], map[v]} in E(h),
// or nullopt when none exists. Throws GuardExceededError when either graph is
// larger than options.max_order.
//
// Vertices are first colored by iterated neighbor-color refinement (computed
// jointly for both graphs so colors are comparable), then matched by
// backtracking restricted to equal colors.
std::optional<std::vector<Vertex>> FindIsomorphism(
    const Graph& g, const Graph& h, const IsomorphismOptions& options = {});

bool IsIsomorphic(const Graph& g, const Graph& h,
                  const IsomorphismOptions& options = {});

}  // namespace sdom

#endif  // SDOM_ISOMORPHISM_H_
