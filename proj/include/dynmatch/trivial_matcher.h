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

#ifndef DYNMATCH_TRIVIAL_MATCHER_H_
#define DYNMATCH_TRIVIAL_MATCHER_H_

#include <cstddef>
#include <cstdint>

#include "dynmatch/maintainer.h"

namespace dynmatch {

// Reference maintainer: matches an inserted edge whose endpoints are both
// free, and on deletion of a matched edge lets each endpoint scan its whole
// neighborhood for the smallest-id free neighbor.
class TrivialMatcher final : public MatchingMaintainer {
 public:
  TrivialMatcher(std::size_t n, std::uint64_t seed = 0);

  void Insert(VertexId u, VertexId v) override;
  void Delete(VertexId u, VertexId v) override;

  Algorithm algorithm() const override { return Algorithm::kTrivial; }

 private:
  void Settle(VertexId v);
};

}  // namespace dynmatch

#endif  // DYNMATCH_TRIVIAL_MATCHER_H_
