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

#include "dynmatch/multilevel_matcher.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dynmatch {
namespace {

int FloorLog2(std::size_t n) { return static_cast<int>(std::bit_width(n)) - 1; }

std::uint64_t Pow2(int i) { return std::uint64_t{1} << i; }

}  // namespace

MultilevelMatcher::MultilevelMatcher(std::size_t n, std::uint64_t seed)
    : MatchingMaintainer(n, seed),
      top_level_(FloorLog2(n)),
      level_(n, -1),
      owned_(n),
      nonowned_(n * static_cast<std::size_t>(top_level_ + 2)),
      phi_(n * static_cast<std::size_t>(top_level_ + 1), 0),
      queues_(static_cast<std::size_t>(top_level_ + 1)),
      queued_level_(n, kNotQueued) {}

std::size_t MultilevelMatcher::NonOwnedCount(VertexId v, int level) const {
  if (level < -1 || level > top_level_) return 0;
  return ESet(v, level).size();
}

VertexId MultilevelMatcher::Owner(VertexId u, VertexId v) const {
  auto it = slot_of_.find(EdgeKey::Of(u, v));
  if (it == slot_of_.end()) throw GraphError("edge " + ToString(EdgeKey::Of(u, v)) + " absent");
  return slots_[it->second].owner;
}

void MultilevelMatcher::IncrementPhi(VertexId v, int j) {
  ++phi_.at(PhiIndex(v, j));
  Work(WorkCategory::kPhiIncrement);
}

void MultilevelMatcher::DecrementPhi(VertexId v, int lo, int hi) {
  for (int j = std::max(lo, 0); j <= std::min(hi, top_level_); ++j) {
    std::uint32_t& slot = phi_[PhiIndex(v, j)];
    if (slot == 0) {
      throw std::logic_error("phi underflow at vertex " + std::to_string(v) + " level " +
                             std::to_string(j));
    }
    --slot;
    Work(WorkCategory::kPhiDecrement);
  }
}

std::optional<int> MultilevelMatcher::CanRise(VertexId v) const {
  for (int j = top_level_; j > level_.at(v); --j) {
    if (phi_[PhiIndex(v, j)] >= Pow2(j)) return j;
  }
  return std::nullopt;
}

void MultilevelMatcher::AddOwned(EdgeId id) {
  EdgeSlot& slot = slots_[id];
  auto& set = owned_[slot.owner];
  slot.owned_pos = static_cast<std::uint32_t>(set.size());
  set.push_back(id);
}

void MultilevelMatcher::RemoveOwned(EdgeId id) {
  auto& set = owned_[slots_[id].owner];
  const std::uint32_t pos = slots_[id].owned_pos;
  const EdgeId last = set.back();
  set[pos] = last;
  slots_[last].owned_pos = pos;
  set.pop_back();
}

void MultilevelMatcher::AddNonOwned(EdgeId id, int level) {
  EdgeSlot& slot = slots_[id];
  auto& set = ESet(slot.key.Other(slot.owner), level);
  slot.nonowned_pos = static_cast<std::uint32_t>(set.size());
  set.push_back(id);
}

void MultilevelMatcher::RemoveNonOwned(EdgeId id, int level) {
  const EdgeSlot& slot = slots_[id];
  auto& set = ESet(slot.key.Other(slot.owner), level);
  const std::uint32_t pos = slot.nonowned_pos;
  const EdgeId last = set.back();
  set[pos] = last;
  slots_[last].nonowned_pos = pos;
  set.pop_back();
}

void MultilevelMatcher::Insert(VertexId u, VertexId v) {
  const EdgeOccurrence occurrence = graph_.InsertEdge(u, v);
  UpdateScope update(*this);
  Work(WorkCategory::kStructural);
  const int lu = level_[u], lv = level_[v];
  const VertexId owner = lu > lv ? u : (lv > lu ? v : std::min(u, v));
  EdgeId id;
  if (free_slots_.empty()) {
    id = static_cast<EdgeId>(slots_.size());
    slots_.emplace_back();
  } else {
    id = free_slots_.back();
    free_slots_.pop_back();
  }
  slots_[id] = EdgeSlot{occurrence.key, owner, 0, 0, occurrence};
  slot_of_.emplace(occurrence.key, id);
  AddOwned(id);
  AddNonOwned(id, level_[owner]);
  for (int j = std::max(lu, lv) + 1; j <= top_level_; ++j) {
    IncrementPhi(u, j);
    IncrementPhi(v, j);
  }
  const std::optional<int> ru = CanRise(u), rv = CanRise(v);
  if (!ru && !rv) return;
  VertexId riser;
  if (ru && rv) {
    riser = *ru != *rv ? (*ru > *rv ? u : v) : std::min(u, v);
  } else {
    riser = ru ? u : v;
  }
  RiseTo(riser, *(riser == u ? ru : rv));
  Drain();
  CheckLateRise(riser == u ? v : u);
  Drain();
}

void MultilevelMatcher::Delete(VertexId u, VertexId v) {
  const EdgeOccurrence occurrence = graph_.LiveOccurrence(u, v);
  const EdgeId id = slot_of_.at(occurrence.key);
  const VertexId owner = slots_[id].owner;
  graph_.DeleteEdge(u, v);
  UpdateScope update(*this);
  Work(WorkCategory::kStructural);
  const int top = std::max(level_[u], level_[v]);
  ledger_.RecordDeletion(top);
  const VertexId owners[] = {owner};
  ledger_.OnEdgeDeleted(occurrence, owners);
  DecrementPhi(u, top + 1, top_level_);
  DecrementPhi(v, top + 1, top_level_);
  RemoveNonOwned(id, level_[owner]);
  RemoveOwned(id);
  slot_of_.erase(occurrence.key);
  free_slots_.push_back(id);
  if (!matching_.Contains(u, v)) return;
  const int k = level_[u];
  UnmatchVertex(u, EpochCause::kNatural);
  const std::pair<VertexId, int> freed[] = {{occurrence.key.lo(), k}, {occurrence.key.hi(), k}};
  ProcessFreeVertices(freed);
}

void MultilevelMatcher::Raise(VertexId x, int i) {
  const int old = level_[x];
  for (EdgeId id : owned_[x]) {
    const VertexId w = slots_[id].key.Other(x);
    RemoveNonOwned(id, old);
    AddNonOwned(id, i);
    Work(WorkCategory::kOwnershipTransfer);
    DecrementPhi(w, old + 1, i);
  }
  for (int j = old; j < i; ++j) {
    std::vector<EdgeId> taken;
    taken.swap(ESet(x, j));
    for (EdgeId id : taken) {
      const VertexId w = slots_[id].owner;
      RemoveOwned(id);
      slots_[id].owner = x;
      AddOwned(id);
      AddNonOwned(id, i);
      Work(WorkCategory::kOwnershipTransfer);
      DecrementPhi(w, j + 1, i);
    }
  }
  for (int j = std::max(old + 1, 0); j <= i; ++j) {
    phi_[PhiIndex(x, j)] = 0;
    Work(WorkCategory::kPhiReset);
  }
  level_[x] = i;
}

std::optional<VertexId> MultilevelMatcher::GenericRandomSettle(VertexId u, int i) {
  if (matching_.IsMatched(u)) throw std::logic_error("settle of a matched vertex");
  if (i < 0 || i > top_level_ || level_[u] > i) throw std::logic_error("settle level out of range");
  ChargeScope charge(*this);
  if (level_[u] < i) Raise(u, i);
  const std::size_t owned = owned_[u].size();
  if (owned == 0) throw std::logic_error("settle of a vertex owning nothing");
  if (owned < Pow2(i) || (i < top_level_ && owned >= Pow2(i + 1))) ++settle_bound_violations_;
  std::vector<EdgeOccurrence> initial;
  initial.reserve(owned);
  for (EdgeId id : owned_[u]) initial.push_back(slots_[id].occurrence);
  const auto pick = static_cast<std::size_t>(rng_.UniformIndex(owned, num_vertices()) - 1);
  const VertexId v = slots_[owned_[u][pick]].key.Other(u);
  if (level_[v] >= i) throw std::logic_error("random mate is not below the settle level");
  std::optional<VertexId> displaced;
  if (matching_.IsMatched(v)) displaced = UnmatchVertex(v, EpochCause::kInduced);
  queued_level_[u] = kNotQueued;
  queued_level_[v] = kNotQueued;
  Raise(v, i);
  const EpochId epoch = MatchPair(u, v, i, static_cast<std::uint32_t>(owned), initial);
  charge.ChargeTo(epoch);
  if (trace_enabled_) trace_.push_back({Event::Kind::kSettle, u, i, v});
  return displaced;
}

bool MultilevelMatcher::Falling(VertexId v) {
  const int i = level_[v];
  const std::vector<EdgeId> snapshot = owned_[v];
  for (EdgeId id : snapshot) {
    const VertexId w = slots_[id].key.Other(v);
    Work(WorkCategory::kScan);
    if (level_[w] != i) continue;
    RemoveNonOwned(id, i);
    RemoveOwned(id);
    slots_[id].owner = w;
    AddOwned(id);
    AddNonOwned(id, i);
    Work(WorkCategory::kOwnershipTransfer);
  }
  return i < 0 || owned_[v].size() < Pow2(i);
}

void MultilevelMatcher::FallOneLevel(VertexId v, int i) {
  level_[v] = i - 1;
  if (trace_enabled_) trace_.push_back({Event::Kind::kFall, v, i - 1});
  std::vector<VertexId> candidates;
  for (EdgeId id : owned_[v]) {
    const VertexId u = slots_[id].key.Other(v);
    RemoveNonOwned(id, i);
    AddNonOwned(id, i - 1);
    Work(WorkCategory::kOwnershipTransfer);
    IncrementPhi(u, i);
    IncrementPhi(v, i);
    if (Phi(u, i) >= Pow2(i)) candidates.push_back(u);
  }
  Enqueue(v);
  for (VertexId u : candidates) {
    if (level_[u] < i && Phi(u, i) >= Pow2(i)) RiseTo(u, i);
  }
}

void MultilevelMatcher::RiseTo(VertexId r, int i) {
  std::optional<VertexId> old_mate;
  if (matching_.IsMatched(r)) old_mate = UnmatchVertex(r, EpochCause::kInduced);
  SettleAndQueue(r, i);
  Enqueue(old_mate);
}

void MultilevelMatcher::SettleAndQueue(VertexId u, int i) {
  const std::optional<VertexId> displaced = GenericRandomSettle(u, i);
  Enqueue(displaced);
  const VertexId mate = *matching_.Mate(u);
  CheckLateRise(u);
  CheckLateRise(mate);
}

void MultilevelMatcher::CheckLateRise(VertexId v) {
  if (auto j = CanRise(v)) {
    ++late_rises_;
    RiseTo(v, *j);
  }
}

void MultilevelMatcher::Enqueue(std::optional<VertexId> v) {
  if (!v || matching_.IsMatched(*v) || level_[*v] < 0) return;
  const int level = level_[*v];
  if (draining_level_ && level >= *draining_level_) ++queue_violations_;
  queued_level_[*v] = level;
  queues_[static_cast<std::size_t>(level)].push_back(*v);
  Work(WorkCategory::kQueueOp);
}

void MultilevelMatcher::ProcessFreeVertices(
    std::span<const std::pair<VertexId, int>> free_vertices) {
  for (const auto& [v, level] : free_vertices) {
    if (level < 0 || level_.at(v) != level || matching_.IsMatched(v)) {
      throw std::logic_error("process-free-vertices given a vertex that is not free at " +
                             std::to_string(level));
    }
  }
  for (const auto& [v, level] : free_vertices) Enqueue(v);
  Drain();
}

void MultilevelMatcher::Drain() {
  bool pending = true;
  while (pending) {
    for (int i = top_level_; i >= 0; --i) {
      draining_level_ = i;
      auto& queue = queues_[static_cast<std::size_t>(i)];
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        Work(WorkCategory::kQueueOp);
        if (queued_level_[v] != i) continue;
        queued_level_[v] = kNotQueued;
        if (matching_.IsMatched(v) || level_[v] != i) continue;
        ChargeScope charge(*this);
        if (Falling(v)) {
          FallOneLevel(v, i);
        } else {
          SettleAndQueue(v, i);
        }
        charge.ChargeTo(ledger_.LastEpochOf(v));
      }
    }
    draining_level_.reset();
    pending = std::any_of(queues_.begin(), queues_.end(),
                          [](const std::deque<VertexId>& q) { return !q.empty(); });
  }
}

std::optional<std::string> MultilevelMatcher::Audit() const {
  if (auto err = MatchingMaintainer::Audit()) return err;
  const std::size_t n = num_vertices();
  auto at = [](VertexId v) { return "vertex " + std::to_string(v); };
  if (slot_of_.size() != graph_.num_edges()) return "edge slot count disagrees with the graph";
  for (const EdgeKey& e : graph_.Edges()) {
    auto it = slot_of_.find(e);
    if (it == slot_of_.end()) return "live edge " + ToString(e) + " has no slot";
    const EdgeSlot& slot = slots_[it->second];
    if (!(slot.key == e) || !e.Touches(slot.owner)) return "slot of " + ToString(e) + " is corrupt";
    const VertexId other = e.Other(slot.owner);
    const int lo = level_[slot.owner];
    if (lo < level_[other]) return "edge " + ToString(e) + " owned by its lower endpoint";
    const auto& os = owned_[slot.owner];
    if (slot.owned_pos >= os.size() || os[slot.owned_pos] != it->second) {
      return "owned position of " + ToString(e) + " is stale";
    }
    const auto& es = ESet(other, lo);
    if (slot.nonowned_pos >= es.size() || es[slot.nonowned_pos] != it->second) {
      return "edge " + ToString(e) + " missing from E of its non-owner at level " +
             std::to_string(lo);
    }
  }
  std::size_t owned_total = 0, nonowned_total = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int lv = level_[v];
    owned_total += owned_[v].size();
    for (int k = -1; k <= top_level_; ++k) nonowned_total += ESet(v, k).size();
    if (lv < -1 || lv > top_level_) return at(v) + " has level out of range";
    if (!ESet(v, -1).empty()) return at(v) + " has edges owned by a level -1 vertex";
    if (lv == -1) {
      if (matching_.IsMatched(v)) return "level -1 " + at(v) + " is matched";
      if (!owned_[v].empty()) return "level -1 " + at(v) + " owns edges";
    } else if (matching_.IsFree(v)) {
      return at(v) + " at level " + std::to_string(lv) + " is free";
    }
    if (auto mate = matching_.Mate(v); mate && level_[*mate] != lv) {
      return "matched pair at different levels at " + at(v);
    }
    if (queued_level_[v] != kNotQueued) return at(v) + " left in a free queue";
    std::uint64_t expect = owned_[v].size();
    for (int j = 0; j <= top_level_; ++j) {
      const std::uint32_t stored = phi_[PhiIndex(v, j)];
      if (j <= lv) {
        if (stored != 0) return "unused phi slot " + std::to_string(j) + " nonzero at " + at(v);
        continue;
      }
      expect += ESet(v, j - 1).size();
      if (stored != expect) {
        return "phi(" + std::to_string(v) + ", " + std::to_string(j) + ") stored " +
               std::to_string(stored) + " but recomputed " + std::to_string(expect);
      }
      if (stored >= Pow2(j)) {
        return "phi(" + std::to_string(v) + ", " + std::to_string(j) + ") = " +
               std::to_string(stored) + " reaches 2^" + std::to_string(j);
      }
    }
  }
  if (owned_total != graph_.num_edges()) return "owned sets do not partition the edges";
  if (nonowned_total != graph_.num_edges()) return "non-owned sets do not cover each edge once";
  for (const auto& q : queues_) {
    for (VertexId v : q) {
      if (queued_level_[v] != kNotQueued) return "free queue not drained";
    }
  }
  return std::nullopt;
}

}  // namespace dynmatch
