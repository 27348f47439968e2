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

#include "sdom/vertex_set.h"

#include <bit>
#include <string>

#include "sdom/errors.h"

namespace sdom {
namespace {

constexpr int kWordBits = 64;

int WordCount(int order) { return (order + kWordBits - 1) / kWordBits; }

}  // namespace

VertexSet::VertexSet(int owner_order)
    : owner_order_(owner_order), words_(WordCount(owner_order), 0) {
  if (owner_order < 0) {
    throw InvalidArgumentError("vertex set owner order must be non-negative");
  }
}

VertexSet VertexSet::Empty(int owner_order) { return VertexSet(owner_order); }

VertexSet VertexSet::All(int owner_order) {
  VertexSet s(owner_order);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.ClearPadding();
  return s;
}

VertexSet VertexSet::Of(int owner_order, std::span<const Vertex> members) {
  VertexSet s(owner_order);
  for (Vertex v : members) {
    s.CheckVertex(v);
    s.words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }
  return s;
}

VertexSet VertexSet::Of(int owner_order, std::initializer_list<Vertex> members) {
  return Of(owner_order, std::span<const Vertex>(members.begin(), members.size()));
}

int VertexSet::size() const {
  int count = 0;
  for (auto w : words_) count += std::popcount(w);
  return count;
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= owner_order_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1;
}

VertexSet VertexSet::With(Vertex v) const {
  CheckVertex(v);
  VertexSet s = *this;
  s.words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  return s;
}

VertexSet VertexSet::Without(Vertex v) const {
  CheckVertex(v);
  VertexSet s = *this;
  s.words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  return s;
}

VertexSet VertexSet::Complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.ClearPadding();
  return s;
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  CheckSameOwner(other);
  VertexSet s = *this;
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] |= other.words_[i];
  return s;
}

VertexSet VertexSet::Intersection(const VertexSet& other) const {
  CheckSameOwner(other);
  VertexSet s = *this;
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] &= other.words_[i];
  return s;
}

VertexSet VertexSet::Difference(const VertexSet& other) const {
  CheckSameOwner(other);
  VertexSet s = *this;
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~other.words_[i];
  return s;
}

bool VertexSet::Intersects(const VertexSet& other) const {
  CheckSameOwner(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::Members() const {
  std::vector<Vertex> out;
  for (size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Vertex VertexSet::First() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    }
  }
  return -1;
}

std::string VertexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : Members()) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void VertexSet::CheckVertex(Vertex v) const {
  if (v < 0 || v >= owner_order_) {
    throw InvalidArgumentError("vertex " + std::to_string(v) +
                               " out of range for order " +
                               std::to_string(owner_order_));
  }
}

void VertexSet::CheckSameOwner(const VertexSet& other) const {
  if (other.owner_order_ != owner_order_) {
    throw InvalidArgumentError("vertex sets index graphs of different order (" +
                               std::to_string(owner_order_) + " vs " +
                               std::to_string(other.owner_order_) + ")");
  }
}

void VertexSet::ClearPadding() {
  const int tail = owner_order_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

}  // namespace sdom
