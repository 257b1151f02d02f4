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

#include "pdiag/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pdiag {

namespace {

double draw_coordinate(Rng& rng, double max_coordinate) {
  std::uniform_real_distribution<double> uniform(0.0, max_coordinate);
  std::bernoulli_distribution snap(0.5);
  const double x = uniform(rng);
  return snap(rng) ? std::min(max_coordinate, std::round(2.0 * x) / 2.0) : x;
}

Point draw_point(Rng& rng, double max_coordinate) {
  double a = draw_coordinate(rng, max_coordinate);
  double b = draw_coordinate(rng, max_coordinate);
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

PersistenceDiagram random_diagram(Rng& rng, std::uint32_t max_points,
                                  double max_coordinate) {
  std::uniform_int_distribution<std::uint32_t> count(0, max_points);
  std::bernoulli_distribution repeat(0.2);
  const std::uint32_t k = count(rng);
  std::vector<PointRecord> records;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!records.empty() && repeat(rng)) {
      records.push_back(records.back());
      continue;
    }
    const Point p = draw_point(rng, max_coordinate);
    records.push_back({p.birth, p.death, 1});
  }
  return diagram_from_points(records);
}

ExtensionSpec random_extension_spec(Rng& rng, std::uint32_t n, std::uint32_t m,
                                    bool zero_embedding) {
  ExtensionSpec spec;
  spec.n = n;
  spec.m = m;
  std::bernoulli_distribution diagonal(0.25);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint32_t j = 0; j < n; ++j) {
    Point p = draw_point(rng, static_cast<double>(n));
    if (diagonal(rng)) p.death = p.birth;
    spec.g_points.push_back(p);
  }
  for (std::uint32_t k = 0; k < m; ++k) {
    spec.i_coords.push_back(zero_embedding ? 0.0 : unit(rng));
  }
  return spec;
}

}  // namespace pdiag
