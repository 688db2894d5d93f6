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

#include "dynmatch/dynamic_graph.h"

#include <sstream>

namespace dynmatch {

DynamicGraph::DynamicGraph(std::size_t n) {
  if (n == 0) throw GraphError("graph needs at least one vertex");
  if (n >= kNoVertex) throw GraphError("vertex count too large");
  adjacency_.resize(n);
}

void DynamicGraph::CheckVertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(adjacency_.size()) + ")");
  }
}

EdgeOccurrence DynamicGraph::InsertEdge(VertexId u, VertexId v) {
  CheckVertex(u);
  CheckVertex(v);
  const EdgeKey key = EdgeKey::Of(u, v);
  if (live_edges_.Contains(key)) {
    throw GraphError("duplicate insertion of live edge " + ToString(key));
  }
  live_edges_.Insert(key);
  adjacency_[u].Insert(v);
  adjacency_[v].Insert(u);
  const std::uint32_t index = ++occurrences_[key];
  return {key, index};
}

EdgeKey DynamicGraph::DeleteEdge(VertexId u, VertexId v) {
  CheckVertex(u);
  CheckVertex(v);
  const EdgeKey key = EdgeKey::Of(u, v);
  if (!live_edges_.Erase(key)) {
    throw GraphError("deletion of absent edge " + ToString(key));
  }
  adjacency_[u].Erase(v);
  adjacency_[v].Erase(u);
  return key;
}

bool DynamicGraph::HasEdge(VertexId u, VertexId v) const {
  if (u == v || u >= adjacency_.size() || v >= adjacency_.size()) return false;
  return live_edges_.Contains(EdgeKey::Of(u, v));
}

std::uint32_t DynamicGraph::OccurrenceCount(EdgeKey key) const {
  auto it = occurrences_.find(key);
  return it == occurrences_.end() ? 0 : it->second;
}

EdgeOccurrence DynamicGraph::LiveOccurrence(VertexId u, VertexId v) const {
  const EdgeKey key = EdgeKey::Of(u, v);
  if (!live_edges_.Contains(key)) {
    throw GraphError("edge " + ToString(key) + " is not live");
  }
  return {key, OccurrenceCount(key)};
}

std::optional<std::string> DynamicGraph::CheckConsistency() const {
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    degree_sum += adjacency_[u].size();
    for (VertexId v : adjacency_[u]) {
      if (v >= adjacency_.size() || v == u) {
        return "bad neighbour " + std::to_string(v) + " of " + std::to_string(u);
      }
      if (!adjacency_[v].Contains(u)) {
        return "asymmetric adjacency between " + std::to_string(u) + " and " +
               std::to_string(v);
      }
      if (!live_edges_.Contains(EdgeKey::Of(u, v))) {
        return "adjacent pair " + ToString(EdgeKey::Of(u, v)) + " missing from edge set";
      }
    }
  }
  if (degree_sum != 2 * live_edges_.size()) {
    std::ostringstream os;
    os << "degree sum " << degree_sum << " != 2 * m = " << 2 * live_edges_.size();
    return os.str();
  }
  for (EdgeKey key : live_edges_) {
    if (!adjacency_[key.lo()].Contains(key.hi())) {
      return "live edge " + ToString(key) + " missing from adjacency";
    }
    if (OccurrenceCount(key) == 0) return "live edge " + ToString(key) + " has no occurrence";
  }
  return std::nullopt;
}

}  // namespace dynmatch
