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

#ifndef SDOM_EDGE_LIST_H_
#define SDOM_EDGE_LIST_H_

#include <string>
#include <string_view>

#include "sdom/graph.h"

namespace sdom {

// Edge-list text format:
//
//   n m
//   u_1 v_1
//   ...
//   u_m v_m
//
// ASCII, newline separated, 0-indexed, 0 <= u, v < n, u != v. Blank lines are
// ignored; every other line must hold exactly two non-negative integers.
// Throws ParseError on a malformed header or edge line, an edge count that
// differs from m, a self-loop, a duplicate edge or an out-of-range index.
Graph ReadEdgeList(std::string_view text);

// Writes the header and then the edges (u < v) in sorted order, each line
// terminated by '\n'.
std::string WriteEdgeList(const Graph& g);

Graph ReadEdgeListFile(const std::string& path);
void WriteEdgeListFile(const Graph& g, const std::string& path);

}  // namespace sdom

#endif  // SDOM_EDGE_LIST_H_
