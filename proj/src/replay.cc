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

#include "dynmatch/replay.h"

#include <algorithm>
#include <chrono>
#include <exception>

#include "dynmatch/multilevel_matcher.h"

namespace dynmatch {
namespace {

void Fail(RunReport& report, std::size_t index, const std::string& what) {
  report.failed_update = index;
  report.audit_failures.push_back("after update " + std::to_string(index) + ": " + what);
}

void Finish(RunReport& report, const MatchingMaintainer& maintainer, const ReplayOptions& options) {
  report.final_edges = maintainer.graph().num_edges();
  report.matching_size = maintainer.matching().size();
  report.work = maintainer.work().counts();
  report.total_work = maintainer.work().Total();
  report.max_update_work = maintainer.max_update_work();
  report.rng_index_calls = maintainer.rng().index_calls();
  report.rng_index_draws = maintainer.rng().index_draws();
  report.disjointness_violations = maintainer.ledger().disjointness_violations();
  if (const auto* ml = dynamic_cast<const MultilevelMatcher*>(&maintainer)) {
    report.late_rises = ml->late_rises();
    report.queue_violations = ml->queue_violations();
    report.settle_bound_violations = ml->settle_bound_violations();
  }
  if (options.epoch_stats) {
    for (int level : maintainer.ledger().ActiveLevels()) {
      report.levels.push_back({level, maintainer.ledger().StatsForLevel(level)});
    }
  }
  if (options.oracle && report.clean() && maintainer.num_vertices() <= options.oracle_bound) {
    report.maximum_size = MaximumMatchingSize(maintainer.graph(), options.oracle_bound);
    report.ratio = ApproximationRatio(maintainer.graph(), maintainer.matching(),
                                      options.oracle_bound);
    if (!report.ratio->AtLeastHalf()) {
      Fail(report, report.applied == 0 ? 0 : report.applied - 1,
           "matching smaller than half the maximum");
    }
  }
}

}  // namespace

RunReport ReplayOn(MatchingMaintainer& maintainer, const UpdateStream& stream,
                   const ReplayOptions& options) {
  RunReport report;
  report.algorithm = maintainer.algorithm();
  report.seed = maintainer.rng().seed();
  report.n = stream.n;
  report.t = stream.updates.size();
  if (maintainer.num_vertices() != stream.n) {
    Fail(report, 0, "maintainer sized for a different vertex count");
    return report;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto& work = maintainer.work();
  for (std::size_t k = 0; k < stream.updates.size(); ++k) {
    const Update& up = stream.updates[k];
    try {
      if (up.op == UpdateOp::kInsert) {
        maintainer.Insert(up.u, up.v);
      } else {
        maintainer.Delete(up.u, up.v);
      }
    } catch (const std::exception& e) {
      Fail(report, k, e.what());
      break;
    }
    report.applied = k + 1;
    if (work.Get(WorkCategory::kPhiDecrement) > work.Get(WorkCategory::kPhiIncrement)) {
      ++report.phi_accounting_violations;
    }
    const bool last = k + 1 == stream.updates.size();
    if (last || (options.verify_every > 0 && (k + 1) % options.verify_every == 0)) {
      ++report.audits_run;
      if (auto err = maintainer.Audit()) {
        Fail(report, k, *err);
        break;
      }
    }
  }
  if (stream.updates.empty()) {
    ++report.audits_run;
    if (auto err = maintainer.Audit()) Fail(report, 0, *err);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.phi_accounting_violations > 0 && report.clean()) {
    Fail(report, report.applied - 1, "phi decrements exceeded increments");
  }
  Finish(report, maintainer, options);
  return report;
}

RunReport Replay(const UpdateStream& stream, const ReplayOptions& options) {
  auto maintainer = MakeMaintainer(options.algorithm, stream.n, options.seed);
  return ReplayOn(*maintainer, stream, options);
}

CompareReport Compare(const UpdateStream& stream, std::uint64_t seed, std::size_t verify_every,
                      bool oracle) {
  CompareReport result;
  for (Algorithm algorithm :
       {Algorithm::kTrivial, Algorithm::kTwoLevel, Algorithm::kMultilevel}) {
    ReplayOptions options;
    options.algorithm = algorithm;
    options.seed = seed;
    options.verify_every = verify_every;
    options.oracle = oracle;
    result.runs.push_back(Replay(stream, options));
    result.all_clean = result.all_clean && result.runs.back().clean();
  }
  for (const RunReport& a : result.runs) {
    for (const RunReport& b : result.runs) {
      if (a.matching_size > 2 * b.matching_size) result.within_factor_two = false;
    }
  }
  return result;
}

nlohmann::json ToJson(const RunReport& report) {
  nlohmann::json j;
  j["algorithm"] = std::string(ToString(report.algorithm));
  j["seed"] = report.seed;
  j["n"] = report.n;
  j["t"] = report.t;
  j["applied"] = report.applied;
  j["final_edges"] = report.final_edges;
  j["matching_size"] = report.matching_size;
  j["maximum_size"] = report.maximum_size ? nlohmann::json(*report.maximum_size) : nullptr;
  if (report.ratio) {
    j["ratio"] = {{"numerator", report.ratio->numerator},
                  {"denominator", report.ratio->denominator},
                  {"value", report.ratio->value()}};
  } else {
    j["ratio"] = nullptr;
  }
  j["clean"] = report.clean();
  j["audit_failures"] = report.audit_failures;
  j["failed_update"] = report.failed_update ? nlohmann::json(*report.failed_update) : nullptr;
  j["audits_run"] = report.audits_run;
  nlohmann::json work;
  for (std::size_t c = 0; c < kNumWorkCategories; ++c) {
    work[std::string(ToString(static_cast<WorkCategory>(c)))] = report.work[c];
  }
  work["total"] = report.total_work;
  work["per_update"] = report.work_per_update();
  work["max_update"] = report.max_update_work;
  j["work"] = work;
  j["checks"] = {{"phi_accounting_violations", report.phi_accounting_violations},
                 {"late_rises", report.late_rises},
                 {"queue_violations", report.queue_violations},
                 {"settle_bound_violations", report.settle_bound_violations},
                 {"disjointness_violations", report.disjointness_violations}};
  j["rng"] = {{"index_calls", report.rng_index_calls}, {"index_draws", report.rng_index_draws}};
  if (!report.levels.empty()) {
    nlohmann::json levels = nlohmann::json::array();
    for (const LevelReport& l : report.levels) {
      levels.push_back({{"level", l.level},
                        {"natural", l.stats.natural},
                        {"induced", l.stats.induced},
                        {"alive", l.stats.alive},
                        {"deletions", l.stats.deletions},
                        {"mean_duration", l.stats.mean_duration},
                        {"work", l.stats.work},
                        {"max_epoch_work", l.stats.max_epoch_work}});
    }
    j["epochs"] = levels;
  }
  j["seconds"] = report.seconds;
  return j;
}

nlohmann::json ToJson(const CompareReport& report) {
  nlohmann::json runs = nlohmann::json::array();
  for (const RunReport& run : report.runs) runs.push_back(ToJson(run));
  return {{"runs", runs},
          {"within_factor_two", report.within_factor_two},
          {"all_clean", report.all_clean}};
}

}  // namespace dynmatch
