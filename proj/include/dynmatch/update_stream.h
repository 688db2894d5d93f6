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

#ifndef DYNMATCH_UPDATE_STREAM_H_
#define DYNMATCH_UPDATE_STREAM_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynmatch/types.h"

namespace dynmatch {

enum class UpdateOp : char { kInsert = 'I', kDelete = 'D' };

struct Update {
  UpdateOp op;
  VertexId u;
  VertexId v;

  friend bool operator==(const Update&, const Update&) = default;
};

// A sequence of edge updates over a fixed vertex set [0, n).
//
// Text form: a header line "n t", then t lines "I u v" or "D u v". Blank
// lines and anything after '#' are ignored.
struct UpdateStream {
  std::size_t n = 0;
  std::vector<Update> updates;

  friend bool operator==(const UpdateStream&, const UpdateStream&) = default;
};

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws StreamError on malformed text, a record count that disagrees with
// the header, or an illegal update.
UpdateStream ParseStream(std::istream& in);
UpdateStream ParseStreamFile(const std::string& path);

std::string SerializeStream(const UpdateStream& stream);
void WriteStreamFile(const UpdateStream& stream, const std::string& path);

// The first legality violation: out-of-range vertex, self-loop, insertion of
// a live edge or deletion of an absent one.
std::optional<std::string> ValidateStream(const UpdateStream& stream);

// Each update inserts a uniformly random absent pair with probability
// `insert_bias` and otherwise deletes a uniformly random live edge; it falls
// back to the other operation when one is impossible. Throws
// std::invalid_argument for n < 2 with t > 0, a bias outside (0, 1], or
// more forced insertions than there are vertex pairs.
UpdateStream GenerateRandomStream(std::size_t n, std::size_t t, double insert_bias,
                                  std::uint64_t seed);

// `warmup` pure insertions followed by t - warmup biased updates.
UpdateStream GenerateDeletionHeavyStream(std::size_t n, std::size_t t, std::size_t warmup,
                                         double insert_bias, std::uint64_t seed);

// Clique on vertices 0..per_side-1 inserted in lexicographic order, then the
// pendant edges (i, per_side + i). Throws std::invalid_argument if
// per_side < 2.
UpdateStream GenerateCliquePendantAdversary(std::size_t per_side);

}  // namespace dynmatch

#endif  // DYNMATCH_UPDATE_STREAM_H_
