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

#include "dynmatch/rng.h"

#include <stdexcept>
#include <string>

namespace dynmatch {

SeededSource::SeededSource(std::uint64_t seed) : seed_(seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

std::uint64_t SeededSource::Between(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

double SeededSource::UnitInterval() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

std::uint64_t SeededSource::UniformIndex(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || m > n) {
    throw std::invalid_argument("UniformIndex requires 1 <= m <= n (m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
  }
  ++index_calls_;
  for (;;) {
    ++index_draws_;
    if (auto index = ReduceDraw(Between(1, n), m, n)) return *index;
  }
}

}  // namespace dynmatch
