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

#ifndef SDOM_VERTEX_SET_H_
#define SDOM_VERTEX_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sdom {

using Vertex = int;

// An immutable subset of the vertices {0, ..., owner_order - 1} of some graph,
// stored as a packed bitset. Set algebra is only defined between sets with the
// same owner order; mixing owners throws InvalidArgumentError.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet Empty(int owner_order);
  static VertexSet All(int owner_order);
  static VertexSet Of(int owner_order, std::span<const Vertex> members);
  static VertexSet Of(int owner_order, std::initializer_list<Vertex> members);

  int owner_order() const { return owner_order_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(Vertex v) const;

  VertexSet With(Vertex v) const;
  VertexSet Without(Vertex v) const;
  VertexSet Complement() const;
  VertexSet Union(const VertexSet& other) const;
  VertexSet Intersection(const VertexSet& other) const;
  VertexSet Difference(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;

  // Members in increasing order.
  std::vector<Vertex> Members() const;
  // Smallest member, or -1 when empty.
  Vertex First() const;

  // "{0, 2, 5}"
  std::string ToString() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  explicit VertexSet(int owner_order);
  void CheckVertex(Vertex v) const;
  void CheckSameOwner(const VertexSet& other) const;
  void ClearPadding();

  int owner_order_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sdom

#endif  // SDOM_VERTEX_SET_H_
