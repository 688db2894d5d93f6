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

#include "dynmatch/matching.h"

#include <stdexcept>

namespace dynmatch {

void Matching::Match(VertexId u, VertexId v) {
  if (u == v) throw std::logic_error("cannot match a vertex with itself");
  if (IsMatched(u) || IsMatched(v)) {
    throw std::logic_error("match of an already matched vertex");
  }
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
}

VertexId Matching::Unmatch(VertexId v) {
  const VertexId m = mate_.at(v);
  if (m == kNoVertex) throw std::logic_error("unmatch of a free vertex");
  mate_[v] = kNoVertex;
  mate_[m] = kNoVertex;
  --size_;
  return m;
}

bool VerifyMatching(const DynamicGraph& graph, const Matching& matching) {
  if (matching.num_vertices() != graph.num_vertices()) return false;
  const auto& mates = matching.mates();
  std::size_t matched_vertices = 0;
  for (VertexId v = 0; v < mates.size(); ++v) {
    const VertexId m = mates[v];
    if (m == kNoVertex) continue;
    ++matched_vertices;
    if (m >= mates.size() || m == v) return false;
    if (mates[m] != v) return false;
    if (!graph.HasEdge(v, m)) return false;
  }
  // Symmetry makes pairs disjoint; the count ties size() to the mate array.
  return matched_vertices == 2 * matching.size();
}

MaximalityReport CheckMaximal(const DynamicGraph& graph, const Matching& matching) {
  for (EdgeKey key : graph.Edges()) {
    if (matching.IsFree(key.lo()) && matching.IsFree(key.hi())) {
      return {false, key};
    }
  }
  return {};
}

std::size_t MaximumMatchingSize(const DynamicGraph& graph, std::size_t vertex_bound) {
  const std::size_t n = graph.num_vertices();
  if (n > vertex_bound) {
    throw std::length_error("maximum-matching oracle limited to " +
                            std::to_string(vertex_bound) + " vertices");
  }
  if (n <= kBranchAndBoundLimit) return BranchAndBoundMaximumMatching(graph);
  return BlossomMaximumMatching(graph);
}

Ratio ApproximationRatio(const DynamicGraph& graph, const Matching& matching,
                         std::size_t vertex_bound) {
  const std::size_t maximum = MaximumMatchingSize(graph, vertex_bound);
  if (maximum == 0) {
    if (matching.size() != 0) throw std::logic_error("nonempty matching on edgeless graph");
    return {1, 1};
  }
  return {matching.size(), maximum};
}

std::size_t CountPendantAugmentingPaths(const DynamicGraph& graph, const Matching& matching,
                                        std::size_t per_side) {
  std::size_t paths = 0;
  for (VertexId i = 0; i < per_side; ++i) {
    const auto mate = matching.Mate(i);
    if (!mate || *mate >= per_side || *mate < i) continue;
    const VertexId j = *mate;
    const VertexId ui = static_cast<VertexId>(per_side + i);
    const VertexId uj = static_cast<VertexId>(per_side + j);
    if (graph.HasEdge(i, ui) && graph.HasEdge(j, uj) && matching.IsFree(ui) &&
        matching.IsFree(uj)) {
      ++paths;
    }
  }
  return paths;
}

}  // namespace dynmatch
