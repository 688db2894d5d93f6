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

#ifndef DYNMATCH_INSTRUMENTATION_H_
#define DYNMATCH_INSTRUMENTATION_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dynmatch/types.h"

namespace dynmatch {

// Elementary operation categories. Matching and level bookkeeping is counted
// under kStructural.
enum class WorkCategory : std::uint8_t {
  kOwnershipTransfer,
  kPhiIncrement,
  kPhiDecrement,
  kPhiReset,
  kQueueOp,
  kScan,
  kStructural,
};

inline constexpr std::size_t kNumWorkCategories = 7;

std::string_view ToString(WorkCategory category);

class WorkCounter {
 public:
  void Add(WorkCategory category, std::uint64_t amount = 1) {
    counts_[static_cast<std::size_t>(category)] += amount;
  }

  std::uint64_t Get(WorkCategory category) const {
    return counts_[static_cast<std::size_t>(category)];
  }

  std::uint64_t Total() const;

  // Work that may be attributed to epochs: everything except phi decrements
  // and resets, whose cost is bounded by the increments.
  std::uint64_t Chargeable() const {
    return Total() - Get(WorkCategory::kPhiDecrement) - Get(WorkCategory::kPhiReset);
  }

  const std::array<std::uint64_t, kNumWorkCategories>& counts() const { return counts_; }

 private:
  std::array<std::uint64_t, kNumWorkCategories> counts_{};
};

using EpochId = std::uint32_t;

enum class EpochCause : std::uint8_t { kAlive, kNatural, kInduced };

std::string_view ToString(EpochCause cause);

struct EpochRecord {
  EdgeKey edge;
  int level = 0;
  std::uint32_t owned_at_init = 0;
  VertexId initiator = kNoVertex;
  std::uint64_t start_tick = 0;
  std::optional<std::uint64_t> end_tick;
  EpochCause cause = EpochCause::kAlive;
  // Elementary operations attributed to this epoch itself.
  std::uint64_t work = 0;
  // The epoch whose creation terminated this one (induced epochs only).
  std::optional<EpochId> terminated_by;
  std::vector<EpochId> induced_children;
  // Whether the mate was drawn at random from the initiator's owned set; only
  // such epochs carry a tracked initial owned set and a duration.
  bool randomized = false;
  // Deletions of edges from the initial owned set, still owned by the
  // initiator, up to and including the deletion that ended the epoch.
  std::uint32_t duration = 0;
};

struct LevelEpochStats {
  std::uint64_t natural = 0;
  std::uint64_t induced = 0;
  std::uint64_t alive = 0;
  // Deletions whose level (max endpoint level just before repair) is this one.
  std::uint64_t deletions = 0;
  // Mean duration of natural randomized epochs; 0 when there are none.
  double mean_duration = 0.0;
  std::uint64_t work = 0;
  std::uint64_t max_epoch_work = 0;
};

// Records the lifetime of every epoch together with the work attributed to it.
//
// Induced terminations are held as pending until the next Started() call,
// which adopts them as charged children: every induced end happens while a
// settle is about to create the epoch responsible for it.
class EpochLedger {
 public:
  explicit EpochLedger(std::size_t num_vertices);

  // Throws std::logic_error if the initiator or its mate already has a live
  // epoch. A non-empty `initial_owned` marks a randomized epoch and starts
  // duration tracking against that set.
  EpochId Started(VertexId initiator, EdgeKey edge, int level, std::uint32_t owned_at_init,
                  std::uint64_t tick, std::span<const EdgeOccurrence> initial_owned = {});

  // Throws std::logic_error if the epoch already ended.
  void Ended(EpochId id, EpochCause cause, std::uint64_t tick);

  // The live epoch containing `v`, if any.
  std::optional<EpochId> LiveEpochOf(VertexId v) const;

  // The most recent epoch `v` took part in, live or ended.
  std::optional<EpochId> LastEpochOf(VertexId v) const;

  void RecordDeletion(int level);

  // Called for every deleted edge with the endpoint(s) owning it at the time.
  void OnEdgeDeleted(const EdgeOccurrence& occurrence, std::span<const VertexId> owners);

  void ChargeWork(EpochId id, std::uint64_t amount);

  // Own work plus the charged cost of every induced epoch it terminated.
  std::uint64_t ChargedCost(EpochId id) const;

  const EpochRecord& record(EpochId id) const { return records_.at(id); }
  const std::vector<EpochRecord>& records() const { return records_; }

  LevelEpochStats StatsForLevel(int level) const;
  // Levels that saw an epoch or a deletion, ascending.
  std::vector<int> ActiveLevels() const;

  std::size_t live_count() const;
  // Deletions counted toward more than one live epoch's duration.
  std::uint64_t disjointness_violations() const { return disjointness_violations_; }
  std::size_t pending_induced() const { return pending_induced_.size(); }

 private:
  std::vector<EpochRecord> records_;
  std::vector<EpochId> live_by_vertex_;
  std::vector<EpochId> last_by_vertex_;
  std::vector<EpochId> pending_induced_;
  // Initial owned sets of live randomized epochs, keyed by epoch id.
  std::map<EpochId, std::unordered_set<EdgeOccurrence, EdgeOccurrenceHash>> tracked_;
  std::map<int, std::uint64_t> deletions_by_level_;
  std::uint64_t disjointness_violations_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_INSTRUMENTATION_H_
