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

#include "dynmatch/update_stream.h"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "dynmatch/indexed_set.h"
#include "dynmatch/rng.h"

namespace dynmatch {
namespace {

std::string StripComment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool IsBlank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// Random stream state: the live edge set plus a uniform pair sampler.
class StreamBuilder {
 public:
  StreamBuilder(std::size_t n, std::uint64_t seed) : rng_(seed) { stream_.n = n; }

  std::uint64_t pairs() const { return stream_.n * (stream_.n - 1) / 2; }
  bool CanInsert() const { return live_.size() < pairs(); }
  bool CanDelete() const { return !live_.empty(); }
  double Unit() { return rng_.UnitInterval(); }

  void InsertRandom() {
    EdgeKey key;
    if (2 * live_.size() <= pairs()) {
      while (true) {
        const auto u = static_cast<VertexId>(rng_.Between(0, stream_.n - 1));
        const auto v = static_cast<VertexId>(rng_.Between(0, stream_.n - 1));
        if (u == v) continue;
        key = EdgeKey::Of(u, v);
        if (!live_.Contains(key)) break;
      }
    } else {
      std::vector<EdgeKey> absent;
      for (VertexId u = 0; u < stream_.n; ++u) {
        for (VertexId v = u + 1; v < stream_.n; ++v) {
          if (!live_.Contains(EdgeKey::Of(u, v))) absent.push_back(EdgeKey::Of(u, v));
        }
      }
      key = absent[rng_.Between(0, absent.size() - 1)];
    }
    Record(UpdateOp::kInsert, key);
  }

  void DeleteRandom() { Record(UpdateOp::kDelete, live_[rng_.Between(0, live_.size() - 1)]); }

  void Record(UpdateOp op, EdgeKey key) {
    if (op == UpdateOp::kInsert) {
      live_.Insert(key);
    } else {
      live_.Erase(key);
    }
    stream_.updates.push_back({op, key.lo(), key.hi()});
  }

  UpdateStream Take() { return std::move(stream_); }

 private:
  SeededSource rng_;
  UpdateStream stream_;
  IndexedSet<EdgeKey, EdgeKeyHash> live_;
};

void CheckRandomParams(std::size_t n, std::size_t t, double insert_bias) {
  if (n == 0) throw std::invalid_argument("stream needs at least one vertex");
  if (t > 0 && n < 2) throw std::invalid_argument("updates need at least two vertices");
  if (!(insert_bias > 0.0 && insert_bias <= 1.0)) {
    throw std::invalid_argument("insert bias must lie in (0, 1]");
  }
}

void BiasedSteps(StreamBuilder& builder, std::size_t steps, double insert_bias) {
  for (std::size_t k = 0; k < steps; ++k) {
    const bool want_insert = insert_bias >= 1.0 || builder.Unit() < insert_bias;
    if ((want_insert && builder.CanInsert()) || !builder.CanDelete()) {
      builder.InsertRandom();
    } else {
      builder.DeleteRandom();
    }
  }
}

}  // namespace

UpdateStream ParseStream(std::istream& in) {
  UpdateStream stream;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  auto fail = [&](const std::string& what) {
    throw StreamError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = StripComment(line);
    if (IsBlank(body)) continue;
    std::istringstream fields(body);
    std::string extra;
    if (!declared) {
      long long n = -1, t = -1;
      if (!(fields >> n >> t) || (fields >> extra) || n < 1 || t < 0) {
        fail("expected header 'n t' with n >= 1 and t >= 0");
      }
      stream.n = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(t);
      stream.updates.reserve(*declared);
      continue;
    }
    char op = 0;
    long long u = -1, v = -1;
    if (!(fields >> op >> u >> v) || (fields >> extra) || (op != 'I' && op != 'D') || u < 0 ||
        v < 0 || u > static_cast<long long>(kNoVertex) - 1 ||
        v > static_cast<long long>(kNoVertex) - 1) {
      fail("expected 'I u v' or 'D u v'");
    }
    stream.updates.push_back(
        {static_cast<UpdateOp>(op), static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  if (!declared) throw StreamError("missing header line");
  if (stream.updates.size() != *declared) {
    throw StreamError("header declares " + std::to_string(*declared) + " updates, found " +
                      std::to_string(stream.updates.size()));
  }
  if (auto err = ValidateStream(stream)) throw StreamError(*err);
  return stream;
}

UpdateStream ParseStreamFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StreamError("cannot open stream file " + path);
  return ParseStream(in);
}

std::string SerializeStream(const UpdateStream& stream) {
  std::ostringstream out;
  out << stream.n << ' ' << stream.updates.size() << '\n';
  for (const Update& up : stream.updates) {
    out << static_cast<char>(up.op) << ' ' << up.u << ' ' << up.v << '\n';
  }
  return out.str();
}

void WriteStreamFile(const UpdateStream& stream, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StreamError("cannot write stream file " + path);
  out << SerializeStream(stream);
}

std::optional<std::string> ValidateStream(const UpdateStream& stream) {
  std::unordered_set<EdgeKey, EdgeKeyHash> live;
  for (std::size_t k = 0; k < stream.updates.size(); ++k) {
    const Update& up = stream.updates[k];
    const std::string where = "update " + std::to_string(k) + ": ";
    if (up.u >= stream.n || up.v >= stream.n) return where + "vertex out of range";
    if (up.u == up.v) return where + "self-loop";
    const EdgeKey key = EdgeKey::Of(up.u, up.v);
    if (up.op == UpdateOp::kInsert) {
      if (!live.insert(key).second) return where + "insertion of live edge " + ToString(key);
    } else if (live.erase(key) == 0) {
      return where + "deletion of absent edge " + ToString(key);
    }
  }
  return std::nullopt;
}

UpdateStream GenerateRandomStream(std::size_t n, std::size_t t, double insert_bias,
                                  std::uint64_t seed) {
  CheckRandomParams(n, t, insert_bias);
  StreamBuilder builder(n, seed);
  if (insert_bias >= 1.0 && t > builder.pairs()) {
    throw std::invalid_argument("more insertions requested than vertex pairs");
  }
  BiasedSteps(builder, t, insert_bias);
  return builder.Take();
}

UpdateStream GenerateDeletionHeavyStream(std::size_t n, std::size_t t, std::size_t warmup,
                                         double insert_bias, std::uint64_t seed) {
  CheckRandomParams(n, t, insert_bias);
  if (warmup > t) throw std::invalid_argument("warm-up longer than the stream");
  StreamBuilder builder(n, seed);
  if (warmup > builder.pairs()) throw std::invalid_argument("warm-up exceeds vertex pairs");
  for (std::size_t k = 0; k < warmup; ++k) builder.InsertRandom();
  BiasedSteps(builder, t - warmup, insert_bias);
  return builder.Take();
}

UpdateStream GenerateCliquePendantAdversary(std::size_t per_side) {
  if (per_side < 2) throw std::invalid_argument("adversary needs per_side >= 2");
  UpdateStream stream;
  stream.n = 2 * per_side;
  for (VertexId i = 0; i < per_side; ++i) {
    for (VertexId j = i + 1; j < per_side; ++j) {
      stream.updates.push_back({UpdateOp::kInsert, i, j});
    }
  }
  for (VertexId i = 0; i < per_side; ++i) {
    stream.updates.push_back({UpdateOp::kInsert, i, static_cast<VertexId>(per_side + i)});
  }
  return stream;
}

}  // namespace dynmatch
