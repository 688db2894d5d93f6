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

#include "dynmatch/trivial_matcher.h"

#include "dynmatch/update_stream.h"
#include "gtest/gtest.h"

namespace dynmatch {
namespace {

std::uint64_t Scans(const MatchingMaintainer& m) { return m.work().Get(WorkCategory::kScan); }

TEST(TrivialMatcherTest, InsertMatchesFreeEndpoints) {
  TrivialMatcher m(4);
  m.Insert(0, 1);
  EXPECT_TRUE(m.matching().Contains(0, 1));
  m.Insert(1, 2);
  EXPECT_EQ(m.matching().size(), 1u);
  EXPECT_TRUE(m.matching().IsFree(2));
  m.Insert(2, 3);
  EXPECT_TRUE(m.matching().Contains(2, 3));
  EXPECT_EQ(m.Audit(), std::nullopt);
}

TEST(TrivialMatcherTest, DeletingUnmatchedEdgeChangesNothing) {
  TrivialMatcher m(3);
  m.Insert(0, 1);
  m.Insert(1, 2);
  m.Delete(1, 2);
  EXPECT_TRUE(m.matching().Contains(0, 1));
  EXPECT_EQ(m.matching().size(), 1u);
}

TEST(TrivialMatcherTest, PathRematchesMiddleVertex) {
  TrivialMatcher m(3);
  m.Insert(0, 1);
  m.Insert(1, 2);
  m.Delete(0, 1);
  EXPECT_TRUE(m.matching().Contains(1, 2));
  EXPECT_TRUE(m.matching().IsFree(0));
  EXPECT_EQ(m.Audit(), std::nullopt);
}

TEST(TrivialMatcherTest, StarCenterTakesSmallestFreeLeaf) {
  for (bool reversed : {false, true}) {
    TrivialMatcher m(4);
    m.Insert(0, 1);
    if (reversed) {
      m.Insert(3, 0);
      m.Insert(2, 0);
    } else {
      m.Insert(0, 2);
      m.Insert(0, 3);
    }
    m.Delete(0, 1);
    EXPECT_EQ(m.matching().Mate(0), 2u);
    EXPECT_EQ(m.Audit(), std::nullopt);
  }
}

TEST(TrivialMatcherTest, RejectsIllegalUpdatesWithoutSideEffects) {
  TrivialMatcher m(3);
  m.Insert(0, 1);
  EXPECT_THROW(m.Insert(0, 1), GraphError);
  EXPECT_THROW(m.Delete(1, 2), GraphError);
  EXPECT_THROW(m.Insert(1, 1), GraphError);
  EXPECT_EQ(m.tick(), 1u);
  EXPECT_EQ(m.Audit(), std::nullopt);
}

TEST(TrivialMatcherTest, ScanWorkBoundedByEndpointDegrees) {
  const UpdateStream s = GenerateRandomStream(24, 3000, 0.6, 9);
  TrivialMatcher m(24);
  for (const Update& up : s.updates) {
    if (up.op == UpdateOp::kInsert) {
      const std::uint64_t before = Scans(m);
      m.Insert(up.u, up.v);
      EXPECT_EQ(Scans(m), before);
      EXPECT_LE(m.last_update_work(), 2u);
    } else {
      const bool matched = m.matching().Contains(up.u, up.v);
      const std::uint64_t bound = m.graph().Degree(up.u) + m.graph().Degree(up.v);
      const std::uint64_t before = Scans(m);
      m.Delete(up.u, up.v);
      if (matched) {
        EXPECT_LE(Scans(m) - before, bound);
      } else {
        EXPECT_EQ(Scans(m), before);
      }
    }
    ASSERT_EQ(m.Audit(), std::nullopt);
  }
}

}  // namespace
}  // namespace dynmatch
