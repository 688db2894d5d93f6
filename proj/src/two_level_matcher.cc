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

#include "dynmatch/two_level_matcher.h"

#include <cmath>
#include <stdexcept>

namespace dynmatch {
namespace {

std::size_t CeilSqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace

TwoLevelMatcher::TwoLevelMatcher(std::size_t n, std::uint64_t seed)
    : MatchingMaintainer(n, seed), threshold_(CeilSqrt(n)), level_(n, 0), owned_(n) {}

void TwoLevelMatcher::Own(VertexId owner, VertexId other) {
  owned_[owner].Insert(other);
  Work(WorkCategory::kOwnershipTransfer);
}

void TwoLevelMatcher::Disown(VertexId owner, VertexId other) {
  owned_[owner].Erase(other);
  Work(WorkCategory::kOwnershipTransfer);
}

void TwoLevelMatcher::Insert(VertexId u, VertexId v) {
  graph_.InsertEdge(u, v);
  UpdateScope update(*this);
  Work(WorkCategory::kStructural);
  if (level_[u] == 1) {
    Own(u, v);
  } else if (level_[v] == 1) {
    Own(v, u);
  } else {
    HandleInsertion(u, v);
  }
}

void TwoLevelMatcher::HandleInsertion(VertexId u, VertexId v) {
  Own(u, v);
  Own(v, u);
  if (matching_.IsFree(u) && matching_.IsFree(v)) MatchPair(u, v, 0, 0);
  const VertexId x = owned_[u].size() >= owned_[v].size() ? u : v;
  if (owned_[x].size() < threshold_) return;
  std::optional<VertexId> old_mate;
  if (matching_.IsMatched(x)) old_mate = UnmatchVertex(x, EpochCause::kInduced);
  const std::optional<VertexId> displaced = RandomSettle(x);
  SettleIfFreeAtZero(old_mate);
  SettleIfFreeAtZero(displaced);
}

void TwoLevelMatcher::Delete(VertexId u, VertexId v) {
  const EdgeOccurrence occurrence = graph_.LiveOccurrence(u, v);
  std::vector<VertexId> owners;
  if (owned_[u].Contains(v)) owners.push_back(u);
  if (owned_[v].Contains(u)) owners.push_back(v);
  const EdgeKey key = graph_.DeleteEdge(u, v);
  UpdateScope update(*this);
  Work(WorkCategory::kStructural);
  ledger_.RecordDeletion(std::max(level_[u], level_[v]));
  ledger_.OnEdgeDeleted(occurrence, owners);
  for (VertexId owner : owners) Disown(owner, key.Other(owner));
  if (!matching_.Contains(u, v)) return;
  const int level = level_[u];
  UnmatchVertex(u, EpochCause::kNatural);
  if (level == 0) {
    NaiveSettle(key.lo());
    NaiveSettle(key.hi());
  } else {
    HandleFreedLevelOne(key.lo());
    HandleFreedLevelOne(key.hi());
  }
}

void TwoLevelMatcher::HandleFreedLevelOne(VertexId u) {
  if (matching_.IsMatched(u) || level_[u] != 1) return;
  const std::vector<VertexId> snapshot = owned_[u].items();
  for (VertexId w : snapshot) {
    Work(WorkCategory::kScan);
    if (level_[w] == 1) {
      Disown(u, w);
      Own(w, u);
    }
  }
  if (owned_[u].size() >= threshold_) {
    SettleIfFreeAtZero(RandomSettle(u));
    return;
  }
  level_[u] = 0;
  for (VertexId w : owned_[u]) Own(w, u);
  NaiveSettle(u);
  const std::vector<VertexId> neighbors = owned_[u].items();
  for (VertexId w : neighbors) {
    Work(WorkCategory::kScan);
    if (level_[w] != 0 || owned_[w].size() < threshold_) continue;
    std::optional<VertexId> old_mate;
    if (matching_.IsMatched(w)) old_mate = UnmatchVertex(w, EpochCause::kInduced);
    const std::optional<VertexId> displaced = RandomSettle(w);
    SettleIfFreeAtZero(old_mate);
    SettleIfFreeAtZero(displaced);
  }
}

void TwoLevelMatcher::TakeSoleOwnership(VertexId u) {
  for (VertexId w : owned_[u]) {
    if (level_[w] == 0 && owned_[w].Contains(u)) Disown(w, u);
  }
}

std::optional<VertexId> TwoLevelMatcher::RandomSettle(VertexId u) {
  if (matching_.IsMatched(u)) throw std::logic_error("random settle of a matched vertex");
  if (owned_[u].empty()) throw std::logic_error("random settle of a vertex owning nothing");
  ChargeScope charge(*this);
  if (level_[u] == 0) {
    TakeSoleOwnership(u);
    level_[u] = 1;
  }
  const std::size_t owned = owned_[u].size();
  std::vector<EdgeOccurrence> initial;
  initial.reserve(owned);
  for (VertexId w : owned_[u]) initial.push_back(graph_.LiveOccurrence(u, w));
  const auto pick = static_cast<std::size_t>(rng_.UniformIndex(owned, num_vertices()) - 1);
  const VertexId y = owned_[u][pick];
  if (level_[y] != 0) throw std::logic_error("random mate is not at level 0");
  std::optional<VertexId> displaced;
  if (matching_.IsMatched(y)) displaced = UnmatchVertex(y, EpochCause::kInduced);
  TakeSoleOwnership(y);
  level_[y] = 1;
  const EpochId epoch = MatchPair(u, y, 1, static_cast<std::uint32_t>(owned), initial);
  charge.ChargeTo(epoch);
  return displaced;
}

void TwoLevelMatcher::NaiveSettle(VertexId u) {
  if (matching_.IsMatched(u) || level_[u] != 0) return;
  for (VertexId w : owned_[u]) {
    Work(WorkCategory::kScan);
    if (matching_.IsFree(w)) {
      MatchPair(u, w, 0, 0);
      return;
    }
  }
}

void TwoLevelMatcher::SettleIfFreeAtZero(std::optional<VertexId> v) {
  if (v) NaiveSettle(*v);
}

std::optional<std::string> TwoLevelMatcher::Audit() const {
  if (auto err = MatchingMaintainer::Audit()) return err;
  const std::size_t n = num_vertices();
  std::size_t shared = 0;
  for (const EdgeKey& e : graph_.Edges()) {
    const VertexId a = e.lo(), b = e.hi();
    const bool a_owns = owned_[a].Contains(b), b_owns = owned_[b].Contains(a);
    if (level_[a] == 0 && level_[b] == 0) {
      if (!a_owns || !b_owns) return "level-0 edge " + ToString(e) + " not owned by both ends";
      ++shared;
    } else if (level_[a] != level_[b]) {
      const VertexId high = level_[a] > level_[b] ? a : b;
      if (!owned_[high].Contains(e.Other(high)) || owned_[e.Other(high)].Contains(high)) {
        return "edge " + ToString(e) + " not owned solely by its higher endpoint";
      }
    } else if (a_owns == b_owns) {
      return "level-1 edge " + ToString(e) + " must have exactly one owner";
    }
  }
  std::size_t total = 0;
  for (VertexId v = 0; v < n; ++v) {
    total += owned_[v].size();
    for (VertexId w : owned_[v]) {
      if (!graph_.HasEdge(v, w)) {
        return "vertex " + std::to_string(v) + " owns dead edge to " + std::to_string(w);
      }
    }
    if (level_[v] != 0 && level_[v] != 1) return "vertex " + std::to_string(v) + " has bad level";
    if (level_[v] == 1 && matching_.IsFree(v)) {
      return "level-1 vertex " + std::to_string(v) + " is free";
    }
    if (level_[v] == 0 && owned_[v].size() >= threshold_) {
      return "level-0 vertex " + std::to_string(v) + " owns " + std::to_string(owned_[v].size()) +
             " >= threshold edges";
    }
    if (auto mate = matching_.Mate(v); mate && level_[*mate] != level_[v]) {
      return "matched pair at different levels at vertex " + std::to_string(v);
    }
  }
  if (total != graph_.num_edges() + shared) return "owned-set sizes disagree with edge count";
  return std::nullopt;
}

}  // namespace dynmatch
