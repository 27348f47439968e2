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

#include "sdom/edge_list.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sdom/errors.h"

namespace sdom {
namespace {

// Splits a line into whitespace-separated non-negative integers. Returns false
// on any token that is not a plain decimal integer.
bool ParseInts(std::string_view line, std::vector<long long>& out) {
  out.clear();
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    long long value = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph ReadEdgeList(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!IsBlank(line)) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing header line \"n m\"");

  std::vector<long long> ints;
  if (!ParseInts(lines[0], ints) || ints.size() != 2) {
    throw ParseError("malformed header line: \"" + std::string(lines[0]) +
                     "\"");
  }
  constexpr long long kMaxOrder = 1 << 20;
  if (ints[0] > kMaxOrder) throw ParseError("vertex count too large");
  const int n = static_cast<int>(ints[0]);
  const long long m = ints[1];
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) +
                     " edges but found " + std::to_string(lines.size() - 1));
  }

  GraphBuilder builder(n);
  for (size_t k = 1; k < lines.size(); ++k) {
    const std::string where = "edge line " + std::to_string(k);
    if (!ParseInts(lines[k], ints) || ints.size() != 2) {
      throw ParseError(where + " is malformed: \"" + std::string(lines[k]) +
                       "\"");
    }
    if (ints[0] >= n || ints[1] >= n) {
      throw ParseError(where + ": vertex index out of range for n = " +
                       std::to_string(n));
    }
    const Vertex u = static_cast<Vertex>(ints[0]);
    const Vertex v = static_cast<Vertex>(ints[1]);
    if (u == v) {
      throw ParseError(where + ": self-loop at vertex " + std::to_string(u));
    }
    if (builder.HasEdge(u, v)) {
      throw ParseError(where + ": duplicate edge {" + std::to_string(u) +
                       ", " + std::to_string(v) + "}");
    }
    builder.AddEdge(u, v);
  }
  return builder.Build();
}

std::string WriteEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.Edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ReadEdgeList(buffer.str());
}

void WriteEdgeListFile(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << WriteEdgeList(g);
}

}  // namespace sdom
