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

// Command-line driver: generates or loads an update stream, replays it
// against a maintainer, audits it and prints a JSON report on stdout with a
// one-line summary on stderr.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dynmatch/maintainer.h"
#include "dynmatch/replay.h"
#include "dynmatch/update_stream.h"

namespace {

struct Flags {
  std::string mode = "replay";
  std::string algo = "multilevel";
  std::uint64_t seed = 1;
  std::string stream_path;
  std::string gen;
  std::size_t n = 64;
  std::size_t t = 10000;
  double bias = 0.5;
  std::size_t warmup = 0;
  std::size_t per_side = 8;
  std::uint64_t stream_seed = 0;
  std::size_t verify_every = 0;
  bool oracle = false;
  bool epoch_stats = false;
  std::string write_stream;
};

dynmatch::UpdateStream BuildStream(const Flags& f) {
  const std::uint64_t stream_seed = f.stream_seed != 0 ? f.stream_seed : f.seed;
  if (!f.stream_path.empty()) return dynmatch::ParseStreamFile(f.stream_path);
  if (f.gen == "random") return dynmatch::GenerateRandomStream(f.n, f.t, f.bias, stream_seed);
  if (f.gen == "heavy") {
    const std::size_t warmup = f.warmup != 0 ? f.warmup : f.t * 2 / 5;
    return dynmatch::GenerateDeletionHeavyStream(f.n, f.t, warmup, f.bias, stream_seed);
  }
  if (f.gen == "adversary") return dynmatch::GenerateCliquePendantAdversary(f.per_side);
  throw CLI::ValidationError("--gen", "unknown generator '" + f.gen + "'");
}

void Summarize(const dynmatch::RunReport& r) {
  std::fprintf(stderr, "%-10s seed=%llu n=%zu t=%zu |M|=%zu work/update=%.2f %s\n",
               std::string(dynmatch::ToString(r.algorithm)).c_str(),
               static_cast<unsigned long long>(r.seed), r.n, r.t, r.matching_size,
               r.work_per_update(), r.clean() ? "clean" : r.audit_failures.front().c_str());
  if (r.ratio) {
    std::fprintf(stderr, "           maximum=%zu ratio=%.4f\n", *r.maximum_size, r.ratio->value());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Replay edge-update streams against dynamic maximal-matching maintainers"};
  Flags f;
  app.add_option("--mode", f.mode, "replay, compare or generate")
      ->check(CLI::IsMember({"replay", "compare", "generate"}));
  app.add_option("--algo", f.algo, "trivial, two-level or multilevel")
      ->check(CLI::IsMember({"trivial", "two-level", "multilevel"}));
  app.add_option("--seed", f.seed, "Seed of the maintainer's random source");
  auto* stream_opt = app.add_option("--stream", f.stream_path, "Stream file to replay")
                         ->check(CLI::ExistingFile);
  auto* gen_opt = app.add_option("--gen", f.gen, "Generate a stream: random, heavy or adversary")
                      ->check(CLI::IsMember({"random", "heavy", "adversary"}));
  stream_opt->excludes(gen_opt);
  app.add_option("--n", f.n, "Vertex count for generated streams")->check(CLI::PositiveNumber);
  app.add_option("--t", f.t, "Update count for generated streams");
  app.add_option("--bias", f.bias, "Insertion probability for generated streams")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--warmup", f.warmup, "Initial insertions of a heavy stream (default 2t/5)");
  app.add_option("--per-side", f.per_side, "Clique size of the adversary stream");
  app.add_option("--stream-seed", f.stream_seed, "Generator seed (defaults to --seed)");
  app.add_option("--verify-every", f.verify_every, "Audit every K updates; 0 audits at the end");
  app.add_flag("--oracle", f.oracle, "Compare against the exact maximum matching");
  app.add_flag("--epoch-stats", f.epoch_stats, "Report per-level epoch statistics");
  app.add_option("--write-stream", f.write_stream, "Also write the stream to this file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (f.stream_path.empty() && f.gen.empty()) {
      throw CLI::ValidationError("--stream/--gen", "one of --stream or --gen is required");
    }
    const dynmatch::UpdateStream stream = BuildStream(f);
    if (!f.write_stream.empty()) dynmatch::WriteStreamFile(stream, f.write_stream);
    if (f.mode == "generate") {
      if (f.write_stream.empty()) std::cout << dynmatch::SerializeStream(stream);
      return 0;
    }
    if (f.mode == "compare") {
      const auto report = dynmatch::Compare(stream, f.seed, f.verify_every, f.oracle);
      std::cout << dynmatch::ToJson(report).dump(2) << '\n';
      for (const auto& run : report.runs) Summarize(run);
      return report.all_clean && report.within_factor_two ? 0 : 1;
    }
    dynmatch::ReplayOptions options;
    options.algorithm = *dynmatch::ParseAlgorithm(f.algo);
    options.seed = f.seed;
    options.verify_every = f.verify_every;
    options.oracle = f.oracle;
    options.epoch_stats = f.epoch_stats;
    const auto report = dynmatch::Replay(stream, options);
    std::cout << dynmatch::ToJson(report).dump(2) << '\n';
    Summarize(report);
    return report.clean() ? 0 : 1;
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
