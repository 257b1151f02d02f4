// Copyright 2026 The pdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace pdiag::detail {

// Dinic's algorithm on integer capacities. Unit-capacity bipartite layers
// make each run O(E sqrt(V)).
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adjacency_(nodes), level_(nodes), next_(nodes) {}

  void reserve_edges(std::size_t count) {
    to_.reserve(2 * count);
    capacity_.reserve(2 * count);
  }

  // Returns the index of the forward edge.
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
    const std::size_t id = to_.size();
    to_.push_back(to);
    capacity_.push_back(capacity);
    adjacency_[from].push_back(id);
    to_.push_back(from);
    capacity_.push_back(0);
    adjacency_[to].push_back(id + 1);
    initial_.push_back(capacity);
    return id;
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = augment(source, sink, kInfinity)) {
        total += pushed;
      }
    }
    return total;
  }

  std::int64_t flow(std::size_t edge) const {
    return initial_[edge / 2] - capacity_[edge];
  }

  std::size_t target(std::size_t edge) const { return to_[edge]; }

  const std::vector<std::size_t>& edges_from(std::size_t node) const {
    return adjacency_[node];
  }

 private:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t e : adjacency_[u]) {
        if (capacity_[e] > 0 && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          queue.push(to_[e]);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(std::size_t u, std::size_t sink, std::int64_t limit) {
    if (u == sink) return limit;
    auto& edges = adjacency_[u];
    for (std::size_t& i = next_[u]; i < edges.size(); ++i) {
      const std::size_t e = edges[i];
      const std::size_t v = to_[e];
      if (capacity_[e] <= 0 || level_[v] != level_[u] + 1) continue;
      const std::int64_t pushed = augment(v, sink, std::min(limit, capacity_[e]));
      if (pushed > 0) {
        capacity_[e] -= pushed;
        capacity_[e ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::int64_t> initial_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace pdiag::detail
