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

#include "pdiag/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "pdiag/metrics.hpp"

namespace pdiag {

PersistenceDiagram xi_n(std::span<const Point> tuple, std::uint32_t n) {
  if (n == 0) throw Error(Errc::domain, "n must be positive");
  if (tuple.size() != n) {
    throw Error(Errc::domain, "tuple length " + std::to_string(tuple.size()) +
                                  " differs from n = " + std::to_string(n));
  }
  for (const auto& p : tuple) {
    if (!std::isfinite(p.birth) || !std::isfinite(p.death) || p.birth < 0.0 ||
        p.birth > p.death || p.death > static_cast<double>(n)) {
      throw Error(Errc::domain, "tuple point outside the truncated half-plane "
                                "0 <= birth <= death <= n");
    }
  }
  return diagram_from_points(tuple);
}

void validate(const CubeParams& params) {
  if (params.n == 0) throw Error(Errc::domain, "cube dimension must be positive");
  if (params.t.size() != params.n) {
    throw Error(Errc::domain, "expected " + std::to_string(params.n) +
                                  " parameters, got " +
                                  std::to_string(params.t.size()));
  }
  const double upper = params.n;
  for (std::size_t i = 0; i < params.t.size(); ++i) {
    const double ti = params.t[i];
    if (!(ti >= 0.0 && ti <= upper)) {
      throw Error(Errc::domain, "t_" + std::to_string(i + 1) + " = " +
                                    std::to_string(ti) + " outside [0, " +
                                    std::to_string(params.n) + "]");
    }
  }
}

double cube_birth(std::uint32_t n, std::uint32_t i) noexcept {
  return static_cast<double>(i) * (static_cast<double>(n) + 1.0) - 1.0;
}

PersistenceDiagram cube_point(const CubeParams& params) {
  validate(params);
  const double gap = static_cast<double>(params.n) + 1.0;
  std::vector<Point> points;
  points.reserve(params.n);
  for (std::uint32_t i = 1; i <= params.n; ++i) {
    const double x = cube_birth(params.n, i);
    points.push_back({x, x + gap + params.t[i - 1]});
  }
  return diagram_from_points(points);
}

double cube_param_distance(const CubeParams& a, const CubeParams& b) {
  if (a.n != b.n || a.t.size() != b.t.size()) {
    throw Error(Errc::invalid_argument, "cube parameters of different dimension");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.t.size(); ++i) d = std::max(d, std::abs(a.t[i] - b.t[i]));
  return d;
}

IsometryTrial check_cube_pair(const CubeParams& t, const CubeParams& s) {
  const PersistenceDiagram left = cube_point(t);
  const PersistenceDiagram right = cube_point(s);
  IsometryTrial trial;
  trial.t = t.t;
  trial.s = s.t;
  const BottleneckResult result = bottleneck_distance(left, right);
  trial.bottleneck = result.distance;
  trial.parameter_distance = cube_param_distance(t, s);
  trial.deviation = std::abs(trial.bottleneck - trial.parameter_distance);
  trial.in_candidates =
      candidate_values(left, right).contains(result.distance, kIsometryTolerance);
  bool ok = trial.deviation <= kIsometryTolerance && trial.in_candidates &&
            result.matching.is_bijection() &&
            result.matching.recomputed_cost() == result.distance;
  if (t.n <= kIsometryOracleMaxN) {
    trial.oracle_checked = true;
    trial.oracle = oracle_bottleneck(left, right);
    ok = ok && std::abs(trial.oracle - trial.bottleneck) <= kIsometryTolerance;
  }
  trial.unique_optimum = optimal_matching_is_unique(left, right, result);
  if (trial.unique_optimum) {
    const auto& m = result.matching;
    trial.vertical = std::all_of(m.pairs.begin(), m.pairs.end(), [&](const auto& p) {
      const Point& a = m.left_sequence[p.left];
      const Point& b = m.right_sequence[p.right];
      return !a.is_diagonal() && !b.is_diagonal() && a.birth == b.birth;
    });
    ok = ok && trial.vertical;
  }
  trial.passed = ok;
  return trial;
}

IsometryReport verify_cube_isometry(std::uint32_t n, std::size_t trials,
                                    std::uint64_t seed) {
  if (n == 0) throw Error(Errc::domain, "cube dimension must be positive");
  IsometryReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, static_cast<double>(n));
  auto draw = [&] {
    CubeParams p{n, std::vector<double>(n)};
    for (auto& v : p.t) v = coord(rng);
    return p;
  };
  for (std::size_t k = 0; k < trials; ++k) {
    const CubeParams t = draw();
    const CubeParams s = draw();
    IsometryTrial trial = check_cube_pair(t, s);
    report.worst_deviation = std::max(report.worst_deviation, trial.deviation);
    if (trial.unique_optimum) {
      ++report.unique_optimum_trials;
      if (trial.vertical) ++report.vertical_trials;
    }
    (trial.passed ? report.passed : report.failed) += 1;
    report.results.push_back(std::move(trial));
  }
  return report;
}

void validate(const ExtensionSpec& spec) {
  if (spec.n == 0) throw Error(Errc::domain, "n must be positive");
  if (spec.m <= spec.n) {
    throw Error(Errc::domain, "embedding dimension m must exceed n");
  }
  if (spec.g_points.size() != spec.n) {
    throw Error(Errc::domain, "expected " + std::to_string(spec.n) +
                                  " points of g(x), got " +
                                  std::to_string(spec.g_points.size()));
  }
  if (spec.i_coords.size() != spec.m) {
    throw Error(Errc::domain, "expected " + std::to_string(spec.m) +
                                  " embedding coordinates, got " +
                                  std::to_string(spec.i_coords.size()));
  }
  for (const auto& p : spec.g_points) {
    try {
      validate_point(p);
    } catch (const Error& e) {
      throw Error(Errc::domain, std::string("g(x) point: ") + e.what());
    }
  }
  for (double c : spec.i_coords) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw Error(Errc::domain, "embedding coordinate outside [0, 1]: " +
                                    std::to_string(c));
    }
  }
}

PersistenceDiagram extend_embedding(const ExtensionSpec& spec) {
  validate(spec);
  const std::uint64_t block = extension_block_length(spec.n);
  std::vector<Point> points = spec.g_points;
  points.reserve(points.size() + block * spec.m);
  for (std::uint64_t k = 1; k <= spec.m; ++k) {
    const double shift = spec.i_coords[k - 1];
    for (std::uint64_t p = (k - 1) * block + 1; p <= k * block; ++p) {
      const double x = static_cast<double>(p);
      points.push_back({x, x + shift});
    }
  }
  return diagram_from_points(points);
}

bool extension_is_injective_on(std::span<const ExtensionSpec> sample) {
  if (sample.empty()) return true;
  const auto n = sample.front().n;
  const auto m = sample.front().m;
  for (const auto& spec : sample) {
    if (spec.n != n || spec.m != m) {
      throw Error(Errc::invalid_argument, "specs must share n and m");
    }
  }
  using Key = std::pair<PersistenceDiagram, std::vector<double>>;
  std::map<PersistenceDiagram, Key> seen;
  for (const auto& spec : sample) {
    Key key{diagram_from_points(spec.g_points), spec.i_coords};
    auto [it, inserted] = seen.emplace(extend_embedding(spec), key);
    if (!inserted && it->second != key) return false;
  }
  return true;
}

}  // namespace pdiag
