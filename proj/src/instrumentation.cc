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

#include "dynmatch/instrumentation.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dynmatch {
namespace {

constexpr EpochId kNoEpoch = std::numeric_limits<EpochId>::max();

}  // namespace

std::string_view ToString(WorkCategory category) {
  switch (category) {
    case WorkCategory::kOwnershipTransfer:
      return "ownership_transfers";
    case WorkCategory::kPhiIncrement:
      return "phi_increments";
    case WorkCategory::kPhiDecrement:
      return "phi_decrements";
    case WorkCategory::kPhiReset:
      return "phi_resets";
    case WorkCategory::kQueueOp:
      return "queue_ops";
    case WorkCategory::kScan:
      return "scans";
    case WorkCategory::kStructural:
      return "structural";
  }
  return "unknown";
}

std::uint64_t WorkCounter::Total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::string_view ToString(EpochCause cause) {
  switch (cause) {
    case EpochCause::kAlive:
      return "alive";
    case EpochCause::kNatural:
      return "natural";
    case EpochCause::kInduced:
      return "induced";
  }
  return "unknown";
}

EpochLedger::EpochLedger(std::size_t num_vertices)
    : live_by_vertex_(num_vertices, kNoEpoch), last_by_vertex_(num_vertices, kNoEpoch) {}

EpochId EpochLedger::Started(VertexId initiator, EdgeKey edge, int level,
                             std::uint32_t owned_at_init, std::uint64_t tick,
                             std::span<const EdgeOccurrence> initial_owned) {
  if (!edge.Touches(initiator)) throw std::logic_error("initiator is not an endpoint");
  const VertexId mate = edge.Other(initiator);
  if (live_by_vertex_.at(initiator) != kNoEpoch || live_by_vertex_.at(mate) != kNoEpoch) {
    throw std::logic_error("epoch start for a vertex with a live epoch on edge " +
                           ToString(edge));
  }
  const auto id = static_cast<EpochId>(records_.size());
  EpochRecord& rec = records_.emplace_back();
  rec.edge = edge;
  rec.level = level;
  rec.owned_at_init = owned_at_init;
  rec.initiator = initiator;
  rec.start_tick = tick;
  rec.randomized = !initial_owned.empty();
  for (EpochId child : pending_induced_) {
    records_[child].terminated_by = id;
    rec.induced_children.push_back(child);
  }
  pending_induced_.clear();
  if (rec.randomized) {
    tracked_.emplace(id, std::unordered_set<EdgeOccurrence, EdgeOccurrenceHash>(
                             initial_owned.begin(), initial_owned.end()));
  }
  live_by_vertex_[initiator] = live_by_vertex_[mate] = id;
  last_by_vertex_[initiator] = last_by_vertex_[mate] = id;
  return id;
}

void EpochLedger::Ended(EpochId id, EpochCause cause, std::uint64_t tick) {
  EpochRecord& rec = records_.at(id);
  if (rec.cause != EpochCause::kAlive) throw std::logic_error("epoch ended twice");
  if (cause == EpochCause::kAlive) throw std::logic_error("epoch cannot end as alive");
  rec.cause = cause;
  rec.end_tick = tick;
  live_by_vertex_.at(rec.edge.lo()) = kNoEpoch;
  live_by_vertex_.at(rec.edge.hi()) = kNoEpoch;
  tracked_.erase(id);
  if (cause == EpochCause::kInduced) pending_induced_.push_back(id);
}

std::optional<EpochId> EpochLedger::LiveEpochOf(VertexId v) const {
  const EpochId id = live_by_vertex_.at(v);
  return id == kNoEpoch ? std::nullopt : std::optional<EpochId>(id);
}

std::optional<EpochId> EpochLedger::LastEpochOf(VertexId v) const {
  const EpochId id = last_by_vertex_.at(v);
  return id == kNoEpoch ? std::nullopt : std::optional<EpochId>(id);
}

void EpochLedger::RecordDeletion(int level) { ++deletions_by_level_[level]; }

void EpochLedger::OnEdgeDeleted(const EdgeOccurrence& occurrence,
                                std::span<const VertexId> owners) {
  int claims = 0;
  for (VertexId owner : owners) {
    const EpochId id = live_by_vertex_.at(owner);
    if (id == kNoEpoch || records_[id].initiator != owner) continue;
    auto it = tracked_.find(id);
    if (it == tracked_.end() || !it->second.contains(occurrence)) continue;
    ++records_[id].duration;
    ++claims;
  }
  if (claims > 1) ++disjointness_violations_;
}

void EpochLedger::ChargeWork(EpochId id, std::uint64_t amount) { records_.at(id).work += amount; }

std::uint64_t EpochLedger::ChargedCost(EpochId id) const {
  const EpochRecord& rec = records_.at(id);
  std::uint64_t cost = rec.work;
  for (EpochId child : rec.induced_children) cost += ChargedCost(child);
  return cost;
}

LevelEpochStats EpochLedger::StatsForLevel(int level) const {
  LevelEpochStats stats;
  if (auto it = deletions_by_level_.find(level); it != deletions_by_level_.end()) {
    stats.deletions = it->second;
  }
  std::uint64_t duration_sum = 0;
  std::uint64_t duration_count = 0;
  for (const EpochRecord& rec : records_) {
    if (rec.level != level) continue;
    switch (rec.cause) {
      case EpochCause::kAlive:
        ++stats.alive;
        break;
      case EpochCause::kNatural:
        ++stats.natural;
        if (rec.randomized) {
          duration_sum += rec.duration;
          ++duration_count;
        }
        break;
      case EpochCause::kInduced:
        ++stats.induced;
        break;
    }
    stats.work += rec.work;
    stats.max_epoch_work = std::max(stats.max_epoch_work, rec.work);
  }
  if (duration_count > 0) {
    stats.mean_duration = static_cast<double>(duration_sum) / static_cast<double>(duration_count);
  }
  return stats;
}

std::vector<int> EpochLedger::ActiveLevels() const {
  std::set<int> levels;
  for (const auto& [level, count] : deletions_by_level_) levels.insert(level);
  for (const EpochRecord& rec : records_) levels.insert(rec.level);
  return {levels.begin(), levels.end()};
}

std::size_t EpochLedger::live_count() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(),
                    [](const EpochRecord& r) { return r.cause == EpochCause::kAlive; }));
}

}  // namespace dynmatch
