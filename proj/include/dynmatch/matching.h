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

#ifndef DYNMATCH_MATCHING_H_
#define DYNMATCH_MATCHING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dynmatch/dynamic_graph.h"
#include "dynmatch/types.h"

namespace dynmatch {

// Mate map over a fixed vertex set. Symmetry is maintained by construction;
// whether the pairs are live edges is checked by VerifyMatching.
class Matching {
 public:
  explicit Matching(std::size_t n) : mate_(n, kNoVertex) {}

  std::optional<VertexId> Mate(VertexId v) const {
    const VertexId m = mate_.at(v);
    return m == kNoVertex ? std::nullopt : std::optional<VertexId>(m);
  }
  bool IsMatched(VertexId v) const { return mate_.at(v) != kNoVertex; }
  bool IsFree(VertexId v) const { return !IsMatched(v); }
  bool Contains(VertexId u, VertexId v) const { return mate_.at(u) == v && u != v; }

  // Both endpoints must be free.
  void Match(VertexId u, VertexId v);
  // Frees `v` and its mate; returns the former mate. `v` must be matched.
  VertexId Unmatch(VertexId v);

  std::size_t size() const { return size_; }
  std::size_t num_vertices() const { return mate_.size(); }

  // Raw mate array; kNoVertex marks a free vertex.
  const std::vector<VertexId>& mates() const { return mate_; }

  // Test-only escape hatch for building deliberately broken states.
  void SetMateUncheckedForTesting(VertexId v, VertexId mate) { mate_.at(v) = mate; }

 private:
  std::vector<VertexId> mate_;
  std::size_t size_ = 0;
};

struct MaximalityReport {
  bool maximal = true;
  // A live edge with both endpoints free, present iff !maximal.
  std::optional<EdgeKey> witness;
};

// Exact rational |M| / maximum.
struct Ratio {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool AtLeastHalf() const { return 2 * numerator >= denominator; }
};

// True when the mate array is symmetric and every matched pair is a live edge.
bool VerifyMatching(const DynamicGraph& graph, const Matching& matching);

MaximalityReport CheckMaximal(const DynamicGraph& graph, const Matching& matching);

inline constexpr std::size_t kDefaultOracleBound = 256;
inline constexpr std::size_t kBranchAndBoundLimit = 24;

// Exact maximum-matching cardinality. Graphs with at most kBranchAndBoundLimit
// vertices use exhaustive branch-and-bound; larger ones up to `vertex_bound`
// use blossom augmentation. Throws std::length_error above `vertex_bound`.
std::size_t MaximumMatchingSize(const DynamicGraph& graph,
                                std::size_t vertex_bound = kDefaultOracleBound);

// Exhaustive search; n must not exceed kBranchAndBoundLimit.
std::size_t BranchAndBoundMaximumMatching(const DynamicGraph& graph);

// Edmonds' blossom algorithm, O(n^3).
std::size_t BlossomMaximumMatching(const DynamicGraph& graph);

// |M| / maximum. An edgeless graph yields 1. Throws std::logic_error if the
// matching is nonempty but the maximum is zero.
Ratio ApproximationRatio(const DynamicGraph& graph, const Matching& matching,
                         std::size_t vertex_bound = kDefaultOracleBound);

// For the two-phase clique-plus-pendant family on 2*per_side vertices (clique
// on [0, per_side), pendant (i, per_side + i)): counts matched clique edges
// (v_i, v_j) whose pendants u_i and u_j are both free, i.e. vertex-disjoint
// augmenting paths u_i - v_i - v_j - u_j.
std::size_t CountPendantAugmentingPaths(const DynamicGraph& graph, const Matching& matching,
                                        std::size_t per_side);

}  // namespace dynmatch

#endif  // DYNMATCH_MATCHING_H_
