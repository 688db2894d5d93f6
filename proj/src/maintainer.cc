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

#include "dynmatch/maintainer.h"

#include <stdexcept>

#include "dynmatch/multilevel_matcher.h"
#include "dynmatch/trivial_matcher.h"
#include "dynmatch/two_level_matcher.h"

namespace dynmatch {

std::string_view ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kTrivial:
      return "trivial";
    case Algorithm::kTwoLevel:
      return "two-level";
    case Algorithm::kMultilevel:
      return "multilevel";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "trivial") return Algorithm::kTrivial;
  if (name == "two-level") return Algorithm::kTwoLevel;
  if (name == "multilevel") return Algorithm::kMultilevel;
  return std::nullopt;
}

MatchingMaintainer::MatchingMaintainer(std::size_t n, std::uint64_t seed)
    : graph_(n), matching_(n), ledger_(n), rng_(seed) {}

std::optional<std::string> MatchingMaintainer::Audit() const {
  if (auto err = graph_.CheckConsistency()) return "graph: " + *err;
  if (!VerifyMatching(graph_, matching_)) return "matching is not a valid matching of the graph";
  if (auto report = CheckMaximal(graph_, matching_); !report.maximal) {
    return "matching not maximal: free-free edge " + ToString(*report.witness);
  }
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (matching_.IsMatched(v) != ledger_.LiveEpochOf(v).has_value()) {
      return "epoch ledger disagrees with matching at vertex " + std::to_string(v);
    }
  }
  return std::nullopt;
}

MatchingMaintainer::UpdateScope::UpdateScope(MatchingMaintainer& owner)
    : owner_(owner), start_(owner.work_.Total()) {
  ++owner_.tick_;
}

MatchingMaintainer::UpdateScope::~UpdateScope() {
  owner_.last_update_work_ = owner_.work_.Total() - start_;
  owner_.max_update_work_ = std::max(owner_.max_update_work_, owner_.last_update_work_);
}

MatchingMaintainer::ChargeScope::ChargeScope(MatchingMaintainer& owner)
    : owner_(owner), depth_(owner.charge_stack_.size()) {
  owner_.charge_stack_.push_back(0);
}

MatchingMaintainer::ChargeScope::~ChargeScope() {
  owner_.charge_stack_.resize(depth_);
}

void MatchingMaintainer::ChargeScope::ChargeTo(std::optional<EpochId> epoch) {
  if (charged_) throw std::logic_error("charge scope charged twice");
  charged_ = true;
  const std::uint64_t amount = owner_.charge_stack_.at(depth_);
  owner_.charge_stack_[depth_] = 0;
  if (epoch) owner_.ledger_.ChargeWork(*epoch, amount);
}

void MatchingMaintainer::Work(WorkCategory category, std::uint64_t amount) {
  work_.Add(category, amount);
  if (!charge_stack_.empty() && category != WorkCategory::kPhiDecrement &&
      category != WorkCategory::kPhiReset) {
    charge_stack_.back() += amount;
  }
}

EpochId MatchingMaintainer::MatchPair(VertexId initiator, VertexId mate, int level,
                                      std::uint32_t owned_at_init,
                                      std::span<const EdgeOccurrence> initial_owned) {
  matching_.Match(initiator, mate);
  Work(WorkCategory::kStructural);
  return ledger_.Started(initiator, EdgeKey::Of(initiator, mate), level, owned_at_init, tick_,
                         initial_owned);
}

VertexId MatchingMaintainer::UnmatchVertex(VertexId v, EpochCause cause) {
  const auto epoch = ledger_.LiveEpochOf(v);
  if (!epoch) throw std::logic_error("matched vertex without a live epoch");
  ledger_.Ended(*epoch, cause, tick_);
  Work(WorkCategory::kStructural);
  return matching_.Unmatch(v);
}

std::unique_ptr<MatchingMaintainer> MakeMaintainer(Algorithm algorithm, std::size_t n,
                                                   std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kTrivial:
      return std::make_unique<TrivialMatcher>(n, seed);
    case Algorithm::kTwoLevel:
      return std::make_unique<TwoLevelMatcher>(n, seed);
    case Algorithm::kMultilevel:
      return std::make_unique<MultilevelMatcher>(n, seed);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace dynmatch
