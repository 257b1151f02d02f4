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
#include <span>
#include <vector>

#include "pdiag/diagram.hpp"

namespace pdiag {

/// Plane metric used for matching costs: l-infinity.
double rho(const Point& a, const Point& b) noexcept;

/// Cost of sending `a` to the diagonal: (death - birth) / 2.
double diagonal_cost(const Point& a) noexcept;

/// Cost of one matched pair. When exactly one side is diagonal the pair is a
/// deletion and costs the other point's diagonal_cost (the diagonal partner
/// is its projection); two diagonal points cost zero.
double pair_cost(const Point& a, const Point& b) noexcept;

/// Sorted, deduplicated set of values that can be a bottleneck optimum:
/// zero, every cross rho between supports, and every diagonal cost.
struct CandidateSet {
  std::vector<double> values;

  bool contains(double v, double tolerance = 0.0) const noexcept;
};

CandidateSet candidate_values(const PersistenceDiagram& left,
                              const PersistenceDiagram& right);

struct MatchedPair {
  std::size_t left = 0;   // index into Matching::left_sequence
  std::size_t right = 0;  // index into Matching::right_sequence
  double cost = 0.0;
};

/// A bijection between two equal-length sequential representations.
struct Matching {
  std::vector<Point> left_sequence;
  std::vector<Point> right_sequence;
  std::vector<MatchedPair> pairs;
  double cost = 0.0;

  /// True when `pairs` is a permutation of the common index range.
  bool is_bijection() const;
  /// Maximum pair_cost recomputed from the sequences.
  double recomputed_cost() const;
};

struct BottleneckResult {
  double distance = 0.0;
  Matching matching;
};

/// Decides whether a matching with every pair cost <= threshold exists.
/// Throws Error{invalid_argument} for negative or NaN thresholds.
bool feasible(const PersistenceDiagram& left, const PersistenceDiagram& right,
              double threshold);

/// Exact bottleneck distance: the least feasible candidate value, with a
/// witnessing matching whose cost equals the distance.
BottleneckResult bottleneck_distance(const PersistenceDiagram& left,
                                     const PersistenceDiagram& right);

/// True when every optimal matching pairs the same points, ignoring how
/// diagonal padding is arranged. Uses the witness from `result`: the optimum
/// is unique iff forbidding any single assignment of the witness makes the
/// optimal value infeasible.
bool optimal_matching_is_unique(const PersistenceDiagram& left,
                                const PersistenceDiagram& right,
                                const BottleneckResult& result);

/// Largest total multiplicity (left + right) oracle_bottleneck accepts.
inline constexpr std::uint64_t kOracleMaxPoints = 10;

/// Brute force over all permutations of the padded representations of length
/// total(left) + total(right). Throws Error{size_guard} above
/// kOracleMaxPoints.
double oracle_bottleneck(const PersistenceDiagram& left,
                         const PersistenceDiagram& right);

struct WassersteinResult {
  double distance = 0.0;
  /// Optimal assignment; pair costs are rho or diagonal costs (not powered).
  Matching matching;
};

/// q-Wasserstein distance with its optimal matching. Same contract as
/// wasserstein_distance.
WassersteinResult wasserstein_matching(const PersistenceDiagram& left,
                                       const PersistenceDiagram& right,
                                       double q);

/// q-Wasserstein distance by exact assignment on the doubled cost matrix.
/// q = +infinity reproduces the bottleneck distance. q < 1 throws
/// Error{invalid_argument}.
double wasserstein_distance(const PersistenceDiagram& left,
                            const PersistenceDiagram& right, double q);

/// Minimum-cost perfect assignment for a square row-major matrix. Returns the
/// column assigned to each row.
std::vector<std::size_t> solve_assignment(std::span<const double> cost,
                                          std::size_t n);

}  // namespace pdiag
