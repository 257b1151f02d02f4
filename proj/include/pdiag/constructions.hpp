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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pdiag/diagram.hpp"

namespace pdiag {

/// Counts occurrences of each off-diagonal point of an n-tuple; diagonal
/// entries collapse to the empty diagram. Every point must satisfy
/// birth <= death <= n, otherwise throws Error{domain}.
PersistenceDiagram xi_n(std::span<const Point> tuple, std::uint32_t n);

/// Parameters (t_1, ..., t_n) in [0, n]^n of one member of the cube family.
struct CubeParams {
  std::uint32_t n = 1;
  std::vector<double> t;
};

/// Throws Error{domain} when n == 0, t.size() != n, or some t_i is outside
/// [0, n] (or not finite).
void validate(const CubeParams& params);

/// Birth coordinate of the i-th (1-based) cube point: i(n+1) - 1.
double cube_birth(std::uint32_t n, std::uint32_t i) noexcept;

/// The diagram {(x_i, x_i + (n+1) + t_i)}: n points with births n+1 apart.
PersistenceDiagram cube_point(const CubeParams& params);

/// l-infinity distance between parameter vectors of the same n.
double cube_param_distance(const CubeParams& a, const CubeParams& b);

struct IsometryTrial {
  std::vector<double> t;
  std::vector<double> s;
  double bottleneck = 0.0;
  double parameter_distance = 0.0;
  double deviation = 0.0;
  bool in_candidates = true;
  bool oracle_checked = false;
  double oracle = 0.0;
  bool unique_optimum = false;
  bool vertical = false;  // meaningful only when unique_optimum
  bool passed = false;
};

struct IsometryReport {
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unique_optimum_trials = 0;
  std::size_t vertical_trials = 0;
  double worst_deviation = 0.0;
  std::vector<IsometryTrial> results;
};

inline constexpr double kIsometryTolerance = 1e-12;

/// Largest n for which isometry trials are also checked against the
/// brute-force oracle.
inline constexpr std::uint32_t kIsometryOracleMaxN = 2;

/// Compares one pair of cube points: bottleneck against parameter distance,
/// candidate membership, the oracle for small n, and the vertical shape of
/// the witness whenever the optimum is unique.
IsometryTrial check_cube_pair(const CubeParams& t, const CubeParams& s);

/// Runs `trials` pairs drawn uniformly from [0,n]^n with a seeded generator.
IsometryReport verify_cube_isometry(std::uint32_t n, std::size_t trials,
                                    std::uint64_t seed);

/// Input to the embedding extension: the n points of g(x) (diagonal entries
/// allowed) and m > n coordinates of the cube embedding, each in [0,1].
struct ExtensionSpec {
  std::uint32_t n = 1;
  std::uint32_t m = 2;
  std::vector<Point> g_points;
  std::vector<double> i_coords;
};

void validate(const ExtensionSpec& spec);

/// Points in each appended block.
inline constexpr std::uint64_t extension_block_length(std::uint32_t n) noexcept {
  return 2 * static_cast<std::uint64_t>(n) + 1;
}

/// g(x) plus, for k = 1..m, the 2n+1 points (p, p + i_k) with
/// p = (k-1)(2n+1)+1, ..., k(2n+1). Blocks with i_k = 0 lie on the diagonal
/// and vanish.
PersistenceDiagram extend_embedding(const ExtensionSpec& spec);

/// True when specs with different (canonical g, i_coords) never map to the
/// same diagram. Throws Error{invalid_argument} for mixed (n, m).
bool extension_is_injective_on(std::span<const ExtensionSpec> sample);

}  // namespace pdiag
