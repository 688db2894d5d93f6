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
#include <vector>

#include "dynmatch/update_stream.h"
#include "gtest/gtest.h"

namespace dynmatch {
namespace {

using Kind = MultilevelMatcher::Event::Kind;

void Apply(MatchingMaintainer& m, const Update& up) {
  if (up.op == UpdateOp::kInsert) {
    m.Insert(up.u, up.v);
  } else {
    m.Delete(up.u, up.v);
  }
}

std::vector<std::uint32_t> PhiRow(const MultilevelMatcher& m, VertexId v) {
  std::vector<std::uint32_t> row;
  for (int j = 0; j <= m.top_level(); ++j) row.push_back(m.Phi(v, j));
  return row;
}

// Replays a random stream until some vertex reaches `level`; returns false if
// the stream ends first.
bool RunUntilLevel(MultilevelMatcher& m, const UpdateStream& s, int level) {
  for (const Update& up : s.updates) {
    Apply(m, up);
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
      if (m.Level(v) == level) return true;
    }
  }
  return false;
}

TEST(MultilevelMatcherTest, TopLevelIsFloorLog2) {
  EXPECT_EQ(MultilevelMatcher(1, 1).top_level(), 0);
  EXPECT_EQ(MultilevelMatcher(64, 1).top_level(), 6);
  EXPECT_EQ(MultilevelMatcher(100, 1).top_level(), 6);
  EXPECT_EQ(MultilevelMatcher(1 << 14, 1).top_level(), 14);
}

TEST(MultilevelMatcherTest, FreshStateAuditsClean) {
  MultilevelMatcher m(16, 1);
  EXPECT_EQ(m.Audit(), std::nullopt);
  for (VertexId v = 0; v < 16; ++v) EXPECT_EQ(m.Level(v), -1);
}

TEST(MultilevelMatcherTest, FirstInsertionSettlesPairAtLevelZero) {
  MultilevelMatcher m(16, 1);
  m.set_trace_enabled(true);
  m.Insert(0, 1);
  EXPECT_TRUE(m.matching().Contains(0, 1));
  EXPECT_EQ(m.Level(0), 0);
  EXPECT_EQ(m.Level(1), 0);
  EXPECT_EQ(m.Owner(0, 1), 0u);
  EXPECT_EQ(PhiRow(m, 0), (std::vector<std::uint32_t>{0, 1, 1, 1, 1}));
  EXPECT_EQ(PhiRow(m, 1), (std::vector<std::uint32_t>{0, 1, 1, 1, 1}));
  ASSERT_EQ(m.trace().size(), 1u);
  EXPECT_EQ(m.trace()[0].kind, Kind::kSettle);
  EXPECT_EQ(m.trace()[0].vertex, 0u);
  EXPECT_EQ(m.trace()[0].mate, 1u);
  EXPECT_EQ(m.Audit(), std::nullopt);
}

TEST(MultilevelMatcherTest, CanRiseReadsLargestCrossedThreshold) {
  MultilevelMatcher m(16, 1);
  m.Insert(0, 1);
  ASSERT_EQ(m.Level(0), 0);
  m.CorruptPhiForTesting(0, 1, 1);
  m.CorruptPhiForTesting(0, 2, 2);
  m.CorruptPhiForTesting(0, 3, 4);
  EXPECT_EQ(m.CanRise(0), std::nullopt);
  m.CorruptPhiForTesting(0, 1, 2);
  EXPECT_EQ(m.CanRise(0), 1);
  m.CorruptPhiForTesting(0, 3, 8);
  EXPECT_EQ(m.CanRise(0), 3);
  m.CorruptPhiForTesting(0, 0, 5);
  EXPECT_EQ(m.CanRise(0), 3);
}

TEST(MultilevelMatcherTest, AuditDetectsCorruptedPhi) {
  MultilevelMatcher m(16, 1);
  m.Insert(0, 1);
  m.Insert(2, 1);
  ASSERT_EQ(m.Audit(), std::nullopt);
  m.CorruptPhiForTesting(2, 3, m.Phi(2, 3) + 1);
  const auto err = m.Audit();
  ASSERT_TRUE(err.has_value());
  EXPECT_NE(err->find("phi(2, 3)"), std::string::npos);
}

TEST(MultilevelMatcherTest, PhiUpdatesTouchOnlyTheirSlots) {
  MultilevelMatcher m(16, 1);
  m.Insert(0, 1);
  const auto before = PhiRow(m, 5);
  m.IncrementPhi(5, 3);
  auto after = PhiRow(m, 5);
  for (int j = 0; j <= m.top_level(); ++j) {
    EXPECT_EQ(after[j], before[j] + (j == 3 ? 1u : 0u));
  }
  m.IncrementPhi(5, 1);
  m.IncrementPhi(5, 2);
  m.DecrementPhi(5, 1, 3);
  EXPECT_EQ(PhiRow(m, 5), before);
  m.DecrementPhi(5, 3, 2);
  EXPECT_EQ(PhiRow(m, 5), before);
  EXPECT_THROW(m.DecrementPhi(5, 1, 1), std::logic_error);
}

TEST(MultilevelMatcherTest, DeletingUnmatchedEdgeOnlyUpdatesBookkeeping) {
  MultilevelMatcher m(16, 1);
  m.Insert(0, 1);
  m.Insert(2, 1);
  const VertexId matched = *m.matching().Mate(1);
  const VertexId other = matched == 0 ? 2 : 0;
  const auto levels = std::vector<int>{m.Level(0), m.Level(1), m.Level(2)};
  m.Delete(other, 1);
  EXPECT_TRUE(m.matching().Contains(matched, 1));
  EXPECT_EQ((std::vector<int>{m.Level(0), m.Level(1), m.Level(2)}), levels);
  EXPECT_EQ(m.Audit(), std::nullopt);
}

TEST(MultilevelMatcherTest, IsolatedPairFallsToMinusOne) {
  MultilevelMatcher m(16, 1);
  m.Insert(3, 7);
  m.Delete(7, 3);
  EXPECT_EQ(m.Level(3), -1);
  EXPECT_EQ(m.Level(7), -1);
  EXPECT_EQ(m.matching().size(), 0u);
  EXPECT_EQ(m.Audit(), std::nullopt);
}

TEST(MultilevelMatcherTest, EmptyWaveIsANoOp) {
  MultilevelMatcher m(16, 1);
  m.Insert(0, 1);
  const std::uint64_t work = m.work().Total();
  m.ProcessFreeVertices({});
  EXPECT_EQ(m.work().Total(), work);
  const std::pair<VertexId, int> bad[] = {{0, 0}};
  EXPECT_THROW(m.ProcessFreeVertices(bad), std::logic_error);
}

// Path 1 - 0 - 2 on eight vertices: vertex 0 rises to level 1 on the second
// insertion, then the matched edge is deleted. Both random outcomes are
// simulated by hand: the survivor falls one level, which raises the other
// neighbor's phi only at index 1, then settles with it at level 0.
TEST(MultilevelMatcherTest, HandTracedFallAndResettle) {
  bool saw[3] = {false, false, false};
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    MultilevelMatcher m(8, seed);
    m.Insert(0, 1);
    m.Insert(0, 2);
    ASSERT_EQ(m.Level(0), 1);
    const VertexId mate = *m.matching().Mate(0);
    const VertexId other = mate == 1 ? 2 : 1;
    saw[mate] = true;
    EXPECT_EQ(m.Level(mate), 1);
    EXPECT_EQ(m.Level(other), -1);
    EXPECT_EQ(m.Owner(0, 1), 0u);
    EXPECT_EQ(m.Owner(0, 2), 0u);
    EXPECT_EQ(PhiRow(m, other), (std::vector<std::uint32_t>{0, 0, 1, 1}));
    ASSERT_EQ(m.Audit(), std::nullopt);

    m.set_trace_enabled(true);
    m.Delete(0, mate);
    EXPECT_EQ(PhiRow(m, other), (std::vector<std::uint32_t>{0, 1, 1, 1}));
    EXPECT_TRUE(m.matching().Contains(0, other));
    EXPECT_EQ(m.Level(0), 0);
    EXPECT_EQ(m.Level(mate), -1);
    const auto& t = m.trace();
    ASSERT_EQ(t.size(), 4u);
    const VertexId lo = std::min<VertexId>(0, mate), hi = std::max<VertexId>(0, mate);
    EXPECT_TRUE(t[0].kind == Kind::kFall && t[0].vertex == lo && t[0].level == 0);
    EXPECT_TRUE(t[1].kind == Kind::kFall && t[1].vertex == hi && t[1].level == 0);
    EXPECT_TRUE(t[2].kind == Kind::kSettle && t[2].vertex == 0 && t[2].level == 0 &&
                t[2].mate == other);
    EXPECT_TRUE(t[3].kind == Kind::kFall && t[3].vertex == mate && t[3].level == -1);
    EXPECT_EQ(m.Audit(), std::nullopt);
  }
  EXPECT_TRUE(saw[1] && saw[2]);
}

// Pairs (1,2) and (3,4) sit at level 0; inserting (1,3) makes both 1 and 3
// eligible for level 1 and the smaller id rises. When the random mate is 3,
// its old mate 4 is handed back still at level 0 and only then falls.
TEST(MultilevelMatcherTest, RiseDisplacesRandomMatesPartner) {
  bool saw[5] = {};
  for (std::uint64_t seed = 1; seed <= 16; ++seed) {
    MultilevelMatcher m(8, seed);
    m.Insert(1, 2);
    m.Insert(3, 4);
    const auto phi2 = PhiRow(m, 2), phi4 = PhiRow(m, 4);
    m.set_trace_enabled(true);
    m.Insert(1, 3);
    const auto& t = m.trace();
    ASSERT_GE(t.size(), 1u);
    EXPECT_TRUE(t[0].kind == Kind::kSettle && t[0].vertex == 1 && t[0].level == 1);
    const VertexId mate = t[0].mate;
    ASSERT_TRUE(mate == 2 || mate == 3);
    saw[mate] = true;
    EXPECT_TRUE(m.matching().Contains(1, mate));
    if (mate == 3) {
      ASSERT_EQ(t.size(), 3u);
      EXPECT_TRUE(t[1].kind == Kind::kFall && t[1].vertex == 4 && t[1].level == -1);
      EXPECT_TRUE(t[2].kind == Kind::kFall && t[2].vertex == 2 && t[2].level == -1);
    } else {
      EXPECT_TRUE(m.matching().Contains(3, 4));
    }
    const auto after2 = PhiRow(m, 2), after4 = PhiRow(m, 4);
    for (std::size_t j = 0; j < after2.size(); ++j) {
      EXPECT_LE(after2[j], phi2[j]);
      EXPECT_LE(after4[j], phi4[j]);
    }
    EXPECT_EQ(m.Audit(), std::nullopt);
  }
  EXPECT_TRUE(saw[2] && saw[3]);
}

TEST(MultilevelMatcherTest, FallingComparesOwnedCountAfterDisowningPeers) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 10 && checked < 5; ++seed) {
    MultilevelMatcher m(64, seed);
    if (!RunUntilLevel(m, GenerateRandomStream(64, 20000, 0.8, seed), 2)) continue;
    for (VertexId v = 0; v < 64; ++v) {
      if (m.Level(v) != 2) continue;
      std::size_t below = 0;
      for (VertexId w : m.graph().Neighbors(v)) {
        if (m.Owner(v, w) == v && m.Level(w) < 2) ++below;
      }
      EXPECT_EQ(m.Falling(v), below < 4);
      EXPECT_EQ(m.OwnedCount(v), below);
      EXPECT_EQ(m.Audit(), std::nullopt);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(MultilevelMatcherTest, InsertionBetweenLevelsThreeAndOneWithoutRise) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 20 && checked == 0; ++seed) {
    MultilevelMatcher m(64, seed);
    if (!RunUntilLevel(m, GenerateRandomStream(64, 30000, 0.8, seed), 3)) continue;
    for (VertexId a = 0; a < 64 && checked == 0; ++a) {
      if (m.Level(a) != 3) continue;
      for (VertexId b = 0; b < 64 && checked == 0; ++b) {
        if (m.Level(b) != 1 || m.graph().HasEdge(a, b)) continue;
        bool quiet = true;
        for (int j = 4; j <= m.top_level(); ++j) {
          quiet = quiet && m.Phi(a, j) + 1 < (1u << j) && m.Phi(b, j) + 1 < (1u << j);
        }
        if (!quiet) continue;
        const std::size_t e3 = m.NonOwnedCount(b, 3);
        const std::size_t matched = m.matching().size();
        m.Insert(b, a);
        EXPECT_EQ(m.Owner(a, b), a);
        EXPECT_EQ(m.NonOwnedCount(b, 3), e3 + 1);
        EXPECT_EQ(m.Level(a), 3);
        EXPECT_EQ(m.Level(b), 1);
        EXPECT_EQ(m.matching().size(), matched);
        EXPECT_EQ(m.Audit(), std::nullopt);
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 1);
}

// On deleting a matched edge at level i, the smaller endpoint is processed
// first: it settles again at i exactly when it still owns at least 2^i edges
// towards lower-level neighbors.
TEST(MultilevelMatcherTest, SurvivorResettlesIffItOwnsEnoughBelow) {
  int settles = 0, falls = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const UpdateStream s = GenerateRandomStream(64, 8000, 0.7, seed);
    MultilevelMatcher m(64, seed);
    m.set_trace_enabled(true);
    for (const Update& up : s.updates) {
      const bool matched = up.op == UpdateOp::kDelete && m.matching().Contains(up.u, up.v);
      if (!matched) {
        Apply(m, up);
        continue;
      }
      const VertexId lo = std::min(up.u, up.v);
      const int i = m.Level(lo);
      std::size_t below = 0;
      for (VertexId w : m.graph().Neighbors(lo)) {
        if (w != std::max(up.u, up.v) && m.Owner(lo, w) == lo && m.Level(w) < i) ++below;
      }
      m.ClearTrace();
      Apply(m, up);
      ASSERT_FALSE(m.trace().empty());
      const auto& first = m.trace().front();
      EXPECT_EQ(first.vertex, lo);
      if (below >= (1u << i)) {
        EXPECT_EQ(first.kind, Kind::kSettle);
        EXPECT_EQ(first.level, i);
        ++settles;
      } else {
        EXPECT_EQ(first.kind, Kind::kFall);
        EXPECT_EQ(first.level, i - 1);
        ++falls;
      }
    }
    ASSERT_EQ(m.Audit(), std::nullopt);
  }
  EXPECT_GT(settles, 0);
  EXPECT_GT(falls, 0);
}

TEST(MultilevelMatcherTest, RandomStreamsKeepInvariantsEveryStep) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = seed % 2 == 0 ? 64 : 11;
    const UpdateStream s = GenerateRandomStream(n, 4000, 0.45 + 0.07 * seed, seed);
    MultilevelMatcher m(n, seed);
    for (std::size_t k = 0; k < s.updates.size(); ++k) {
      Apply(m, s.updates[k]);
      ASSERT_EQ(m.Audit(), std::nullopt) << "seed " << seed << " update " << k;
      ASSERT_LE(m.work().Get(WorkCategory::kPhiDecrement),
                m.work().Get(WorkCategory::kPhiIncrement));
    }
    EXPECT_EQ(m.late_rises(), 0u);
    EXPECT_EQ(m.queue_violations(), 0u);
    EXPECT_EQ(m.settle_bound_violations(), 0u);
    EXPECT_EQ(m.ledger().disjointness_violations(), 0u);
  }
}

TEST(MultilevelMatcherTest, EpochWorkScalesWithTwoToTheLevel) {
  constexpr double kMeasuredConstant = 48.0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const UpdateStream s = GenerateDeletionHeavyStream(256, 30000, 12000, 0.3, seed);
    MultilevelMatcher m(256, seed);
    for (const Update& up : s.updates) Apply(m, up);
    ASSERT_EQ(m.Audit(), std::nullopt);
    for (const EpochRecord& rec : m.ledger().records()) {
      EXPECT_LE(static_cast<double>(rec.work), kMeasuredConstant * (1 << rec.level))
          << "level " << rec.level;
    }
  }
}

}  // namespace
}  // namespace dynmatch
