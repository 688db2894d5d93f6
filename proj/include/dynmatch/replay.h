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

#ifndef DYNMATCH_REPLAY_H_
#define DYNMATCH_REPLAY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dynmatch/instrumentation.h"
#include "dynmatch/maintainer.h"
#include "dynmatch/matching.h"
#include "dynmatch/update_stream.h"

namespace dynmatch {

struct ReplayOptions {
  Algorithm algorithm = Algorithm::kMultilevel;
  std::uint64_t seed = 1;
  // Full audit every this many updates; 0 audits only after the last one.
  std::size_t verify_every = 0;
  // Compute the exact maximum matching at the end when n <= oracle_bound.
  bool oracle = false;
  std::size_t oracle_bound = kDefaultOracleBound;
  // Include per-level epoch statistics in the report.
  bool epoch_stats = false;
};

struct LevelReport {
  int level = 0;
  LevelEpochStats stats;
};

struct RunReport {
  Algorithm algorithm = Algorithm::kMultilevel;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t t = 0;
  // Updates applied before the run stopped.
  std::size_t applied = 0;
  std::size_t final_edges = 0;
  std::size_t matching_size = 0;
  std::optional<std::size_t> maximum_size;
  std::optional<Ratio> ratio;
  // Empty on a clean run; otherwise the first failure, prefixed with the
  // index of the update after which it was detected.
  std::vector<std::string> audit_failures;
  std::optional<std::size_t> failed_update;
  std::size_t audits_run = 0;
  std::array<std::uint64_t, kNumWorkCategories> work{};
  std::uint64_t total_work = 0;
  std::uint64_t max_update_work = 0;
  // Updates after which cumulative phi decrements exceeded increments.
  std::uint64_t phi_accounting_violations = 0;
  std::uint64_t rng_index_calls = 0;
  std::uint64_t rng_index_draws = 0;
  std::uint64_t late_rises = 0;
  std::uint64_t queue_violations = 0;
  std::uint64_t settle_bound_violations = 0;
  std::uint64_t disjointness_violations = 0;
  std::vector<LevelReport> levels;
  double seconds = 0.0;

  bool clean() const { return audit_failures.empty(); }
  double work_per_update() const {
    return applied == 0 ? 0.0 : static_cast<double>(total_work) / static_cast<double>(applied);
  }
};

// Applies `stream` to `maintainer` (which must be fresh and sized to
// stream.n) and audits as configured. Stops at the first illegal update or
// audit failure.
RunReport ReplayOn(MatchingMaintainer& maintainer, const UpdateStream& stream,
                   const ReplayOptions& options);

// Builds a maintainer for options.algorithm and replays onto it.
RunReport Replay(const UpdateStream& stream, const ReplayOptions& options);

struct CompareReport {
  std::vector<RunReport> runs;
  // Every pair of final matching sizes is within a factor of two.
  bool within_factor_two = true;
  bool all_clean = true;
};

// Replays the stream once per algorithm with the same seed.
CompareReport Compare(const UpdateStream& stream, std::uint64_t seed, std::size_t verify_every,
                      bool oracle);

nlohmann::json ToJson(const RunReport& report);
nlohmann::json ToJson(const CompareReport& report);

}  // namespace dynmatch

#endif  // DYNMATCH_REPLAY_H_
