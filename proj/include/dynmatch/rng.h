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

#ifndef DYNMATCH_RNG_H_
#define DYNMATCH_RNG_H_

#include <cstdint>
#include <optional>
#include <random>

namespace dynmatch {

// Seeded 64-bit source. Two sources built from the same seed produce the same
// sequence, which is what makes replays reproducible.
class SeededSource {
 public:
  explicit SeededSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Next() { return engine_(); }

  // Uniform on [lo, hi].
  std::uint64_t Between(std::uint64_t lo, std::uint64_t hi);

  // Uniform on [0, 1).
  double UnitInterval();

  // Exactly uniform on [1, m], obtained from draws R uniform on [1, n]: R is
  // accepted when R <= n - (n mod m) and mapped to (R mod m) + 1, otherwise
  // redrawn. Requires 1 <= m <= n; throws std::invalid_argument otherwise.
  std::uint64_t UniformIndex(std::uint64_t m, std::uint64_t n);

  // The reduction applied to one draw r in [1, n]: (r mod m) + 1 when
  // r <= n - (n mod m), nothing when r must be redrawn.
  static std::optional<std::uint64_t> ReduceDraw(std::uint64_t r, std::uint64_t m,
                                                 std::uint64_t n) {
    if (r > n - (n % m)) return std::nullopt;
    return (r % m) + 1;
  }

  // Range-reduction bookkeeping: calls to UniformIndex and raw draws of R
  // (accepted or not).
  std::uint64_t index_calls() const { return index_calls_; }
  std::uint64_t index_draws() const { return index_draws_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t index_calls_ = 0;
  std::uint64_t index_draws_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_RNG_H_
