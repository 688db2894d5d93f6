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

#ifndef DYNMATCH_TWO_LEVEL_MATCHER_H_
#define DYNMATCH_TWO_LEVEL_MATCHER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynmatch/indexed_set.h"
#include "dynmatch/maintainer.h"

namespace dynmatch {

// Randomized maintainer with levels {0, 1} and ownership threshold ceil(sqrt n).
//
// An edge between two level-0 vertices is owned by both of them; any other
// edge is owned by exactly one endpoint at the higher level. Maintains:
//   1. every level-1 vertex is matched and every free vertex has only matched
//      neighbors;
//   2. every level-0 vertex owns fewer than threshold() edges;
//   3. matched vertices share a level.
class TwoLevelMatcher final : public MatchingMaintainer {
 public:
  TwoLevelMatcher(std::size_t n, std::uint64_t seed);

  void Insert(VertexId u, VertexId v) override;
  void Delete(VertexId u, VertexId v) override;
  std::optional<std::string> Audit() const override;

  Algorithm algorithm() const override { return Algorithm::kTwoLevel; }

  int Level(VertexId v) const { return level_.at(v); }
  std::size_t OwnedCount(VertexId v) const { return owned_.at(v).size(); }
  bool Owns(VertexId owner, VertexId other) const { return owned_.at(owner).Contains(other); }
  std::size_t threshold() const { return threshold_; }

  // Raises the free vertex `u` to level 1 as sole owner of its edges and
  // matches it to a uniformly random owned neighbor, which is raised too.
  // Returns that neighbor's previous mate, now free. Throws std::logic_error
  // if `u` is matched or owns nothing.
  std::optional<VertexId> RandomSettle(VertexId u);

  // Matches the free level-0 vertex `u` to the first free vertex among its
  // owned neighbors, if any. No-op for matched or level-1 vertices.
  void NaiveSettle(VertexId u);

 private:
  void Own(VertexId owner, VertexId other);
  void Disown(VertexId owner, VertexId other);
  // Makes `u` the sole owner of every edge it currently shares.
  void TakeSoleOwnership(VertexId u);
  void HandleInsertion(VertexId u, VertexId v);
  void HandleFreedLevelOne(VertexId u);
  void SettleIfFreeAtZero(std::optional<VertexId> v);

  std::size_t threshold_;
  std::vector<int> level_;
  std::vector<IndexedSet<VertexId>> owned_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_TWO_LEVEL_MATCHER_H_
