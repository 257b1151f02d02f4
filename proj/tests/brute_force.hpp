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

// Test-only reference: enumerate every partial injection from left copies to
// right copies; unmatched copies pay their distance to the diagonal. Shares
// no code with the library's matching routines.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "pdiag/diagram.hpp"

namespace pdiag::testing {

inline double linf(const Point& a, const Point& b) {
  return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

inline double to_diagonal(const Point& a) { return (a.death - a.birth) * 0.5; }

// Calls visit(costs) for every partial matching; `costs` lists one cost per
// matched pair or deleted copy.
inline void for_each_partial_matching(
    const std::vector<Point>& left, const std::vector<Point>& right,
    const std::function<void(const std::vector<double>&)>& visit) {
  std::vector<bool> used(right.size(), false);
  std::vector<double> costs;
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == left.size()) {
      const std::size_t before = costs.size();
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (!used[j]) costs.push_back(to_diagonal(right[j]));
      }
      visit(costs);
      costs.resize(before);
      return;
    }
    costs.push_back(to_diagonal(left[i]));
    recurse(i + 1);
    costs.pop_back();
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      costs.push_back(linf(left[i], right[j]));
      recurse(i + 1);
      costs.pop_back();
      used[j] = false;
    }
  };
  recurse(0);
}

inline double brute_bottleneck(const PersistenceDiagram& l,
                               const PersistenceDiagram& r) {
  double best = std::numeric_limits<double>::infinity();
  for_each_partial_matching(l.expanded(), r.expanded(), [&](const auto& costs) {
    double worst = 0.0;
    for (double c : costs) worst = std::max(worst, c);
    best = std::min(best, worst);
  });
  return best;
}

inline double brute_wasserstein(const PersistenceDiagram& l,
                                const PersistenceDiagram& r, double q) {
  double best = std::numeric_limits<double>::infinity();
  for_each_partial_matching(l.expanded(), r.expanded(), [&](const auto& costs) {
    double sum = 0.0;
    for (double c : costs) sum += std::pow(c, q);
    best = std::min(best, sum);
  });
  return std::pow(best, 1.0 / q);
}

}  // namespace pdiag::testing
