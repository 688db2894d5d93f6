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

#ifndef DYNMATCH_MULTILEVEL_MATCHER_H_
#define DYNMATCH_MULTILEVEL_MATCHER_H_

#include <climits>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynmatch/maintainer.h"

namespace dynmatch {

// Randomized maintainer over levels -1..top_level() with top_level() =
// floor(log2 n). Every edge has exactly one owner, an endpoint at the higher
// level. phi(v, j) counts the edges v would own if raised to level j.
// Maintains:
//   1. level -1 vertices are free and own nothing; all others are matched;
//   2. phi(v, j) < 2^j for every j > Level(v);
//   3. matched vertices share a level.
class MultilevelMatcher final : public MatchingMaintainer {
 public:
  struct Event {
    enum class Kind { kSettle, kFall };
    Kind kind;
    VertexId vertex;
    int level;
    // The random mate for kSettle; kNoVertex for kFall.
    VertexId mate = kNoVertex;
  };

  MultilevelMatcher(std::size_t n, std::uint64_t seed);

  void Insert(VertexId u, VertexId v) override;
  void Delete(VertexId u, VertexId v) override;
  std::optional<std::string> Audit() const override;

  Algorithm algorithm() const override { return Algorithm::kMultilevel; }

  int top_level() const { return top_level_; }
  int Level(VertexId v) const { return level_.at(v); }
  std::size_t OwnedCount(VertexId v) const { return owned_.at(v).size(); }
  // Number of edges at `v` owned by a neighbor at `level`.
  std::size_t NonOwnedCount(VertexId v, int level) const;
  // The endpoint owning the live edge (u, v); throws GraphError if absent.
  VertexId Owner(VertexId u, VertexId v) const;

  std::uint32_t Phi(VertexId v, int j) const { return phi_.at(PhiIndex(v, j)); }
  void IncrementPhi(VertexId v, int j);
  // Decrements phi(v, j) for j in [lo, hi] clipped to [0, top_level()].
  // Throws std::logic_error on underflow.
  void DecrementPhi(VertexId v, int lo, int hi);
  // The largest j > Level(v) with phi(v, j) >= 2^j.
  std::optional<int> CanRise(VertexId v) const;

  // Disowns every owned edge whose other endpoint sits at Level(v) and
  // reports whether v now owns fewer than 2^Level(v) edges.
  bool Falling(VertexId v);

  // Raises `u` to level i if below it, matches it to a uniformly random owned
  // neighbor raised to i as well, and returns that neighbor's previous mate.
  std::optional<VertexId> GenericRandomSettle(VertexId u, int i);

  // Runs the top-down wave over the given (vertex, level) pairs. Each vertex
  // must be free and sit at the given level, which must be >= 0.
  void ProcessFreeVertices(std::span<const std::pair<VertexId, int>> free_vertices);

  // Rises found by re-checking phi after a settle; nonzero means a
  // settle left some invariant broken.
  std::uint64_t late_rises() const { return late_rises_; }
  // Enqueues at a level not below the level currently being drained.
  std::uint64_t queue_violations() const { return queue_violations_; }
  // Settles at level i whose owner had fewer than 2^i or at least 2^(i+1) edges.
  std::uint64_t settle_bound_violations() const { return settle_bound_violations_; }

  void set_trace_enabled(bool enabled) { trace_enabled_ = enabled; }
  const std::vector<Event>& trace() const { return trace_; }
  void ClearTrace() { trace_.clear(); }

  void CorruptPhiForTesting(VertexId v, int j, std::uint32_t value) {
    phi_.at(PhiIndex(v, j)) = value;
  }

 private:
  using EdgeId = std::uint32_t;

  struct EdgeSlot {
    EdgeKey key;
    VertexId owner = kNoVertex;
    std::uint32_t owned_pos = 0;
    std::uint32_t nonowned_pos = 0;
    EdgeOccurrence occurrence;
  };

  static constexpr int kNotQueued = INT_MIN;

  std::size_t PhiIndex(VertexId v, int j) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(top_level_ + 1) +
           static_cast<std::size_t>(j);
  }
  std::vector<EdgeId>& ESet(VertexId v, int level) {
    return nonowned_[static_cast<std::size_t>(v) * static_cast<std::size_t>(top_level_ + 2) +
                     static_cast<std::size_t>(level + 1)];
  }
  const std::vector<EdgeId>& ESet(VertexId v, int level) const {
    return nonowned_[static_cast<std::size_t>(v) * static_cast<std::size_t>(top_level_ + 2) +
                     static_cast<std::size_t>(level + 1)];
  }

  void AddOwned(EdgeId id);
  void RemoveOwned(EdgeId id);
  // The entry lives in E^level of the non-owning endpoint.
  void AddNonOwned(EdgeId id, int level);
  void RemoveNonOwned(EdgeId id, int level);

  void Raise(VertexId x, int i);
  void FallOneLevel(VertexId v, int i);
  // Frees r from its mate, settles it at level i and queues the freed vertices.
  void RiseTo(VertexId r, int i);
  void SettleAndQueue(VertexId u, int i);
  void CheckLateRise(VertexId v);
  void Enqueue(std::optional<VertexId> v);
  void Drain();

  int top_level_;
  std::vector<int> level_;
  std::vector<EdgeSlot> slots_;
  std::vector<EdgeId> free_slots_;
  std::unordered_map<EdgeKey, EdgeId, EdgeKeyHash> slot_of_;
  std::vector<std::vector<EdgeId>> owned_;
  std::vector<std::vector<EdgeId>> nonowned_;
  std::vector<std::uint32_t> phi_;

  std::vector<std::deque<VertexId>> queues_;
  std::vector<int> queued_level_;
  std::optional<int> draining_level_;

  std::uint64_t late_rises_ = 0;
  std::uint64_t queue_violations_ = 0;
  std::uint64_t settle_bound_violations_ = 0;
  bool trace_enabled_ = false;
  std::vector<Event> trace_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_MULTILEVEL_MATCHER_H_
