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

#include <cmath>
#include <memory>
#include <vector>

#include "dynmatch/two_level_matcher.h"
#include "gtest/gtest.h"

namespace dynmatch {
namespace {

TEST(WorkCounterTest, TotalsAndChargeable) {
  WorkCounter w;
  w.Add(WorkCategory::kScan, 5);
  w.Add(WorkCategory::kPhiIncrement, 3);
  w.Add(WorkCategory::kPhiDecrement, 2);
  w.Add(WorkCategory::kPhiReset);
  EXPECT_EQ(w.Total(), 11u);
  EXPECT_EQ(w.Chargeable(), 8u);
  EXPECT_EQ(w.Get(WorkCategory::kScan), 5u);
  EXPECT_EQ(ToString(WorkCategory::kOwnershipTransfer), "ownership_transfers");
}

TEST(EpochLedgerTest, FirstEpochHasIdZero) {
  EpochLedger ledger(4);
  const EpochId id = ledger.Started(0, EdgeKey::Of(0, 1), 3, 7, 1);
  EXPECT_EQ(id, 0u);
  EXPECT_EQ(ledger.record(id).level, 3);
  EXPECT_EQ(ledger.record(id).owned_at_init, 7u);
  EXPECT_EQ(ledger.record(id).cause, EpochCause::kAlive);
  EXPECT_EQ(ledger.LiveEpochOf(1), id);
  EXPECT_EQ(ledger.live_count(), 1u);
}

TEST(EpochLedgerTest, StartingWhileLiveFails) {
  EpochLedger ledger(4);
  ledger.Started(0, EdgeKey::Of(0, 1), 0, 1, 1);
  EXPECT_THROW(ledger.Started(1, EdgeKey::Of(1, 2), 0, 1, 2), std::logic_error);
  EXPECT_THROW(ledger.Started(3, EdgeKey::Of(0, 1), 0, 1, 2), std::logic_error);
}

TEST(EpochLedgerTest, EndingTwiceFails) {
  EpochLedger ledger(4);
  const EpochId id = ledger.Started(0, EdgeKey::Of(0, 1), 0, 1, 1);
  ledger.Ended(id, EpochCause::kNatural, 2);
  EXPECT_EQ(ledger.record(id).cause, EpochCause::kNatural);
  EXPECT_EQ(ledger.record(id).end_tick, 2u);
  EXPECT_FALSE(ledger.LiveEpochOf(0).has_value());
  EXPECT_EQ(ledger.LastEpochOf(0), id);
  EXPECT_THROW(ledger.Ended(id, EpochCause::kInduced, 3), std::logic_error);
}

TEST(EpochLedgerTest, InducedEpochsLinkToTheirTerminator) {
  EpochLedger ledger(6);
  const EpochId a = ledger.Started(0, EdgeKey::Of(0, 1), 0, 1, 1);
  const EpochId b = ledger.Started(2, EdgeKey::Of(2, 3), 0, 1, 1);
  ledger.ChargeWork(a, 4);
  ledger.ChargeWork(b, 6);
  ledger.Ended(a, EpochCause::kInduced, 2);
  ledger.Ended(b, EpochCause::kInduced, 2);
  EXPECT_EQ(ledger.pending_induced(), 2u);
  const EpochId c = ledger.Started(1, EdgeKey::Of(1, 2), 1, 3, 2);
  ledger.ChargeWork(c, 10);
  EXPECT_EQ(ledger.pending_induced(), 0u);
  EXPECT_EQ(ledger.record(a).terminated_by, c);
  EXPECT_EQ(ledger.record(c).induced_children, (std::vector<EpochId>{a, b}));
  EXPECT_EQ(ledger.ChargedCost(c), 20u);
  EXPECT_EQ(ledger.ChargedCost(a), 4u);
}

TEST(EpochLedgerTest, DurationCountsInitialOwnedDeletions) {
  EpochLedger ledger(5);
  const std::vector<EdgeOccurrence> init = {{EdgeKey::Of(0, 1), 1}, {EdgeKey::Of(0, 2), 1},
                                            {EdgeKey::Of(0, 3), 1}};
  const VertexId owner[] = {0};
  const EpochId id = ledger.Started(0, EdgeKey::Of(0, 3), 1, 3, 1, init);
  EXPECT_TRUE(ledger.record(id).randomized);
  ledger.OnEdgeDeleted({EdgeKey::Of(0, 1), 1}, owner);
  ledger.OnEdgeDeleted({EdgeKey::Of(0, 4), 1}, owner);
  ledger.OnEdgeDeleted({EdgeKey::Of(0, 2), 2}, owner);
  ledger.OnEdgeDeleted({EdgeKey::Of(0, 3), 1}, owner);
  ledger.Ended(id, EpochCause::kNatural, 5);
  EXPECT_EQ(ledger.record(id).duration, 2u);
  EXPECT_EQ(ledger.disjointness_violations(), 0u);
}

TEST(EpochLedgerTest, SharedDeletionIsADisjointnessViolation) {
  EpochLedger ledger(4);
  const std::vector<EdgeOccurrence> init = {{EdgeKey::Of(0, 2), 1}};
  ledger.Started(0, EdgeKey::Of(0, 1), 1, 1, 1, init);
  ledger.Started(2, EdgeKey::Of(2, 3), 1, 1, 1, init);
  const VertexId owners[] = {0, 2};
  ledger.OnEdgeDeleted({EdgeKey::Of(0, 2), 1}, owners);
  EXPECT_EQ(ledger.disjointness_violations(), 1u);
}

TEST(EpochLedgerTest, LevelStatsWithoutActivityAreZero) {
  EpochLedger ledger(4);
  const LevelEpochStats s = ledger.StatsForLevel(5);
  EXPECT_EQ(s.natural, 0u);
  EXPECT_EQ(s.induced, 0u);
  EXPECT_EQ(s.deletions, 0u);
  EXPECT_EQ(s.work, 0u);
  EXPECT_DOUBLE_EQ(s.mean_duration, 0.0);
}

TEST(EpochLedgerTest, LevelStatsSeparateCauses) {
  EpochLedger ledger(6);
  const EpochId a = ledger.Started(0, EdgeKey::Of(0, 1), 2, 4, 1);
  ledger.Started(2, EdgeKey::Of(2, 3), 2, 4, 1);
  ledger.Ended(a, EpochCause::kNatural, 3);
  ledger.RecordDeletion(2);
  ledger.RecordDeletion(2);
  const LevelEpochStats s = ledger.StatsForLevel(2);
  EXPECT_EQ(s.natural, 1u);
  EXPECT_EQ(s.alive, 1u);
  EXPECT_EQ(s.deletions, 2u);
  EXPECT_EQ(ledger.ActiveLevels(), std::vector<int>{2});
}

// A star whose center sits at level 1 owning `owned` leaf edges after its
// first matched edge was deleted, so its current mate is uniform.
std::unique_ptr<TwoLevelMatcher> SettledStar(std::uint64_t seed, VertexId owned) {
  auto m = std::make_unique<TwoLevelMatcher>(64, seed);
  for (VertexId leaf = 1; leaf <= owned + 1; ++leaf) m->Insert(0, leaf);
  m->Delete(0, *m->matching().Mate(0));
  return m;
}

TEST(EpochCountTest, NaturalEpochsUnderFixedDeletionOrderFollowHarmonicSum) {
  constexpr VertexId kOwned = 32;
  constexpr int kDeletions = 8;
  constexpr int kSeeds = 4000;
  double total = 0.0;
  for (int seed = 1; seed <= kSeeds; ++seed) {
    auto m = SettledStar(static_cast<std::uint64_t>(seed), kOwned);
    ASSERT_EQ(m->Level(0), 1);
    ASSERT_EQ(m->OwnedCount(0), kOwned);
    const std::uint64_t before = m->ledger().StatsForLevel(1).natural;
    std::vector<VertexId> leaves;
    for (VertexId leaf = 1; leaf <= kOwned + 1; ++leaf) {
      if (m->graph().HasEdge(0, leaf)) leaves.push_back(leaf);
    }
    for (int k = 0; k < kDeletions; ++k) m->Delete(0, leaves[static_cast<std::size_t>(k)]);
    ASSERT_EQ(m->Audit(), std::nullopt);
    total += static_cast<double>(m->ledger().StatsForLevel(1).natural - before);
  }
  const double mean = total / kSeeds;
  double harmonic = 0.0;
  for (int j = kOwned - kDeletions + 1; j <= static_cast<int>(kOwned); ++j) harmonic += 1.0 / j;
  EXPECT_NEAR(mean, harmonic, 0.04);
}

}  // namespace
}  // namespace dynmatch
