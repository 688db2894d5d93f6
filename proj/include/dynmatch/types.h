// Copyright 2026 The dynmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DYNMATCH_TYPES_H_
#define DYNMATCH_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace dynmatch {

// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Unordered pair of distinct vertices, stored with the smaller index first.
class EdgeKey {
 public:
  constexpr EdgeKey() = default;

  // Throws GraphError on a self-loop.
  static EdgeKey Of(VertexId a, VertexId b);

  constexpr VertexId lo() const { return lo_; }
  constexpr VertexId hi() const { return hi_; }

  // The endpoint that is not `v`. `v` must be an endpoint.
  constexpr VertexId Other(VertexId v) const { return v == lo_ ? hi_ : lo_; }
  constexpr bool Touches(VertexId v) const { return v == lo_ || v == hi_; }

  constexpr std::uint64_t Packed() const {
    return (static_cast<std::uint64_t>(lo_) << 32) | hi_;
  }

  friend constexpr bool operator==(EdgeKey, EdgeKey) = default;
  friend constexpr auto operator<=>(EdgeKey, EdgeKey) = default;

 private:
  constexpr EdgeKey(VertexId lo, VertexId hi) : lo_(lo), hi_(hi) {}

  VertexId lo_ = 0;
  VertexId hi_ = 0;
};

struct EdgeKeyHash {
  std::size_t operator()(EdgeKey key) const noexcept {
    // splitmix64 finalizer; std::hash<uint64_t> is the identity on libstdc++.
    std::uint64_t x = key.Packed() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

// The k-th time a given pair was inserted (k >= 1). At most one occurrence of
// a key is live at any time.
struct EdgeOccurrence {
  EdgeKey key;
  std::uint32_t index = 0;

  friend bool operator==(const EdgeOccurrence&, const EdgeOccurrence&) = default;
};

struct EdgeOccurrenceHash {
  std::size_t operator()(const EdgeOccurrence& occ) const noexcept {
    return EdgeKeyHash{}(occ.key) ^ (static_cast<std::size_t>(occ.index) * 0x9e3779b97f4a7c15ULL);
  }
};

// Raised for illegal graph updates: self-loops, duplicate live edges, missing
// edges and out-of-range vertices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string ToString(EdgeKey key);

}  // namespace dynmatch

#endif  // DYNMATCH_TYPES_H_
