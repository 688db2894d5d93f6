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

// Exact maximum-matching oracles. Both work from the ground-truth graph only
// and share nothing with the dynamic maintainers they are used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dynmatch/matching.h"

namespace dynmatch {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const DynamicGraph& graph) : adjacency_(graph.num_vertices(), 0) {
    for (EdgeKey key : graph.Edges()) {
      adjacency_[key.lo()] |= std::uint32_t{1} << key.hi();
      adjacency_[key.hi()] |= std::uint32_t{1} << key.lo();
    }
  }

  int Solve() {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
      if (adjacency_[v] != 0) mask |= std::uint32_t{1} << v;
    }
    return Best(mask);
  }

 private:
  // Maximum matching inside the vertex subset `mask`. The lowest vertex is
  // either left unmatched or matched to one of its neighbours in the subset.
  int Best(std::uint32_t mask) {
    if (std::popcount(mask) < 2) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
    const int ceiling = std::popcount(mask) / 2;
    int best = 0;
    for (std::uint32_t nbrs = adjacency_[v] & rest; nbrs != 0 && best < ceiling;
         nbrs &= nbrs - 1) {
      const int w = std::countr_zero(nbrs);
      best = std::max(best, 1 + Best(rest & ~(std::uint32_t{1} << w)));
    }
    if (best < std::popcount(rest) / 2) best = std::max(best, Best(rest));
    memo_.emplace(mask, best);
    return best;
  }

  std::vector<std::uint32_t> adjacency_;
  std::unordered_map<std::uint32_t, int> memo_;
};

class Blossom {
 public:
  explicit Blossom(const DynamicGraph& graph)
      : n_(static_cast<int>(graph.num_vertices())),
        adjacency_(graph.num_vertices()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {
    for (EdgeKey key : graph.Edges()) {
      adjacency_[key.lo()].push_back(static_cast<int>(key.hi()));
      adjacency_[key.hi()].push_back(static_cast<int>(key.lo()));
    }
  }

  int Solve() {
    int size = 0;
    // Greedy start; augmenting from every remaining free vertex finishes it.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adjacency_[v]) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = FindPath(root);
      if (v == -1) continue;
      ++size;
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return size;
  }

 private:
  int LowestCommonAncestor(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int FindPath(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adjacency_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int current_base = LowestCommonAncestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          MarkPath(v, current_base, to);
          MarkPath(to, current_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = current_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::size_t BranchAndBoundMaximumMatching(const DynamicGraph& graph) {
  if (graph.num_vertices() > kBranchAndBoundLimit) {
    throw std::length_error("branch-and-bound oracle limited to " +
                            std::to_string(kBranchAndBoundLimit) + " vertices");
  }
  return static_cast<std::size_t>(BranchAndBound(graph).Solve());
}

std::size_t BlossomMaximumMatching(const DynamicGraph& graph) {
  return static_cast<std::size_t>(Blossom(graph).Solve());
}

}  // namespace dynmatch
