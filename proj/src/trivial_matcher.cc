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

#include "dynmatch/trivial_matcher.h"

namespace dynmatch {

TrivialMatcher::TrivialMatcher(std::size_t n, std::uint64_t seed)
    : MatchingMaintainer(n, seed) {}

void TrivialMatcher::Insert(VertexId u, VertexId v) {
  graph_.InsertEdge(u, v);
  UpdateScope update(*this);
  Work(WorkCategory::kStructural);
  if (matching_.IsFree(u) && matching_.IsFree(v)) MatchPair(u, v, 0, 0);
}

void TrivialMatcher::Delete(VertexId u, VertexId v) {
  const EdgeOccurrence occurrence = graph_.LiveOccurrence(u, v);
  const EdgeKey key = graph_.DeleteEdge(u, v);
  UpdateScope update(*this);
  Work(WorkCategory::kStructural);
  ledger_.RecordDeletion(0);
  ledger_.OnEdgeDeleted(occurrence, {});
  if (!matching_.Contains(u, v)) return;
  UnmatchVertex(u, EpochCause::kNatural);
  Settle(key.lo());
  Settle(key.hi());
}

void TrivialMatcher::Settle(VertexId v) {
  if (matching_.IsMatched(v)) return;
  VertexId best = kNoVertex;
  for (VertexId w : graph_.Neighbors(v)) {
    Work(WorkCategory::kScan);
    if (matching_.IsFree(w) && w < best) best = w;
  }
  if (best != kNoVertex) MatchPair(v, best, 0, 0);
}

}  // namespace dynmatch
