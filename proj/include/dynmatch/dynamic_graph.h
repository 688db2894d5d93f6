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

#ifndef DYNMATCH_DYNAMIC_GRAPH_H_
#define DYNMATCH_DYNAMIC_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynmatch/indexed_set.h"
#include "dynmatch/types.h"

namespace dynmatch {

// Ground-truth undirected simple graph over a fixed vertex set [0, n).
//
// Every maintainer mirrors its updates into one of these; the verifiers and
// the maximum-matching oracle read it. Illegal updates throw GraphError and
// leave the graph untouched.
class DynamicGraph {
 public:
  // Throws GraphError if n == 0.
  explicit DynamicGraph(std::size_t n);

  EdgeOccurrence InsertEdge(VertexId u, VertexId v);
  EdgeKey DeleteEdge(VertexId u, VertexId v);

  bool HasEdge(VertexId u, VertexId v) const;

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return live_edges_.size(); }
  std::size_t Degree(VertexId v) const { return adjacency_.at(v).size(); }

  const IndexedSet<VertexId>& Neighbors(VertexId v) const { return adjacency_.at(v); }
  const IndexedSet<EdgeKey, EdgeKeyHash>& Edges() const { return live_edges_; }

  // Number of times `key` has been inserted so far (0 if never).
  std::uint32_t OccurrenceCount(EdgeKey key) const;

  // The live occurrence of `key`. Throws GraphError if the edge is absent.
  EdgeOccurrence LiveOccurrence(VertexId u, VertexId v) const;

  // Recomputes adjacency symmetry and the edge count from scratch. Returns a
  // description of the first inconsistency, if any.
  std::optional<std::string> CheckConsistency() const;

 private:
  void CheckVertex(VertexId v) const;

  std::vector<IndexedSet<VertexId>> adjacency_;
  IndexedSet<EdgeKey, EdgeKeyHash> live_edges_;
  std::unordered_map<EdgeKey, std::uint32_t, EdgeKeyHash> occurrences_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_DYNAMIC_GRAPH_H_
