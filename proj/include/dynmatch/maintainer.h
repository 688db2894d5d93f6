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

#ifndef DYNMATCH_MAINTAINER_H_
#define DYNMATCH_MAINTAINER_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynmatch/dynamic_graph.h"
#include "dynmatch/instrumentation.h"
#include "dynmatch/matching.h"
#include "dynmatch/rng.h"

namespace dynmatch {

enum class Algorithm { kTrivial, kTwoLevel, kMultilevel };

std::string_view ToString(Algorithm algorithm);
// Accepts "trivial", "two-level" and "multilevel".
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

// A fully dynamic maximal-matching maintainer. Owns the ground-truth graph it
// mirrors updates into, the matching, the work counter and the epoch ledger.
class MatchingMaintainer {
 public:
  MatchingMaintainer(std::size_t n, std::uint64_t seed);
  virtual ~MatchingMaintainer() = default;

  MatchingMaintainer(const MatchingMaintainer&) = delete;
  MatchingMaintainer& operator=(const MatchingMaintainer&) = delete;

  // Throws GraphError for illegal updates, leaving the state untouched.
  virtual void Insert(VertexId u, VertexId v) = 0;
  virtual void Delete(VertexId u, VertexId v) = 0;

  // Recomputes every invariant the algorithm maintains from scratch, plus
  // matching validity and maximality. Returns the first violation found.
  virtual std::optional<std::string> Audit() const;

  virtual Algorithm algorithm() const = 0;

  const DynamicGraph& graph() const { return graph_; }
  const Matching& matching() const { return matching_; }
  const WorkCounter& work() const { return work_; }
  const EpochLedger& ledger() const { return ledger_; }
  const SeededSource& rng() const { return rng_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  // Number of updates applied so far.
  std::uint64_t tick() const { return tick_; }

  // Largest per-update work seen so far, and the work of the last update.
  std::uint64_t max_update_work() const { return max_update_work_; }
  std::uint64_t last_update_work() const { return last_update_work_; }

 protected:
  // Per-update bracket: advances the tick and tracks per-update work.
  class UpdateScope {
   public:
    explicit UpdateScope(MatchingMaintainer& owner);
    ~UpdateScope();
    UpdateScope(const UpdateScope&) = delete;
    UpdateScope& operator=(const UpdateScope&) = delete;

   private:
    MatchingMaintainer& owner_;
    std::uint64_t start_;
  };

  // Collects chargeable work done while alive; the owner decides which epoch
  // receives it. Nested scopes do not leak work into enclosing ones.
  class ChargeScope {
   public:
    explicit ChargeScope(MatchingMaintainer& owner);
    ~ChargeScope();
    ChargeScope(const ChargeScope&) = delete;
    ChargeScope& operator=(const ChargeScope&) = delete;

    void ChargeTo(std::optional<EpochId> epoch);

   private:
    MatchingMaintainer& owner_;
    std::size_t depth_;
    bool charged_ = false;
  };

  void Work(WorkCategory category, std::uint64_t amount = 1);

  // Matches u and v and opens an epoch initiated by u.
  EpochId MatchPair(VertexId initiator, VertexId mate, int level,
                    std::uint32_t owned_at_init,
                    std::span<const EdgeOccurrence> initial_owned = {});
  // Frees `v` and its mate, closing their epoch; returns the former mate.
  VertexId UnmatchVertex(VertexId v, EpochCause cause);

  DynamicGraph graph_;
  Matching matching_;
  WorkCounter work_;
  EpochLedger ledger_;
  SeededSource rng_;
  std::uint64_t tick_ = 0;

 private:
  std::vector<std::uint64_t> charge_stack_;
  std::uint64_t max_update_work_ = 0;
  std::uint64_t last_update_work_ = 0;
};

std::unique_ptr<MatchingMaintainer> MakeMaintainer(Algorithm algorithm, std::size_t n,
                                                   std::uint64_t seed);

}  // namespace dynmatch

#endif  // DYNMATCH_MAINTAINER_H_
