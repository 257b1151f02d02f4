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

#include "pdiag/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "max_flow.hpp"

namespace pdiag {

double rho(const Point& a, const Point& b) noexcept {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const Point& a) noexcept {
  return (a.death - a.birth) / 2.0;
}

double pair_cost(const Point& a, const Point& b) noexcept {
  if (a.is_diagonal() && b.is_diagonal()) return 0.0;
  if (b.is_diagonal()) return diagonal_cost(a);
  if (a.is_diagonal()) return diagonal_cost(b);
  return rho(a, b);
}

bool CandidateSet::contains(double v, double tolerance) const noexcept {
  auto it = std::lower_bound(values.begin(), values.end(), v - tolerance);
  return it != values.end() && *it <= v + tolerance;
}

CandidateSet candidate_values(const PersistenceDiagram& left,
                              const PersistenceDiagram& right) {
  CandidateSet set;
  auto& v = set.values;
  v.reserve(1 + left.support_size() * right.support_size() +
            left.support_size() + right.support_size());
  v.push_back(0.0);
  for (const auto& l : left.entries()) {
    v.push_back(diagonal_cost(l.point));
    for (const auto& r : right.entries()) v.push_back(rho(l.point, r.point));
  }
  for (const auto& r : right.entries()) v.push_back(diagonal_cost(r.point));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return set;
}

bool Matching::is_bijection() const {
  const std::size_t k = left_sequence.size();
  if (right_sequence.size() != k || pairs.size() != k) return false;
  std::vector<bool> left_used(k, false);
  std::vector<bool> right_used(k, false);
  for (const auto& p : pairs) {
    if (p.left >= k || p.right >= k || left_used[p.left] || right_used[p.right])
      return false;
    left_used[p.left] = right_used[p.right] = true;
  }
  return true;
}

double Matching::recomputed_cost() const {
  double worst = 0.0;
  for (const auto& p : pairs) {
    worst = std::max(worst,
                     pair_cost(left_sequence[p.left], right_sequence[p.right]));
  }
  return worst;
}

namespace {

// Expanded copies of both diagrams with their deletion costs.
struct MatchingProblem {
  std::vector<Point> left;
  std::vector<Point> right;
  std::vector<double> left_diag;
  std::vector<double> right_diag;

  MatchingProblem(const PersistenceDiagram& l, const PersistenceDiagram& r)
      : left(l.expanded()), right(r.expanded()) {
    left_diag.reserve(left.size());
    right_diag.reserve(right.size());
    for (const auto& p : left) left_diag.push_back(diagonal_cost(p));
    for (const auto& p : right) right_diag.push_back(diagonal_cost(p));
  }
};

// One assignment excluded from the search; used to probe uniqueness.
struct Exclusion {
  enum class Kind { none, pair, left_deletion, right_deletion };
  Kind kind = Kind::none;
  std::size_t left = 0;
  std::size_t right = 0;
};

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct Assignment {
  // Partner in the other diagram per expanded copy, or kUnmatched when the
  // copy goes to the diagonal.
  std::vector<std::size_t> left_partner;
  std::vector<std::size_t> right_partner;
};

// Flow network: source -> left copies and a left-side diagonal hub standing
// in for deletions of right copies; symmetric on the right; the two hubs are
// joined so unused diagonal slots pair with each other at zero cost. A
// threshold is feasible iff the flow saturates every copy.
//
// A cross edge is omitted when both endpoints are deletable at the threshold:
// rerouting through the hubs gives an equally cheap matching.
std::optional<Assignment> solve_threshold(const MatchingProblem& problem,
                                          double threshold,
                                          const Exclusion& exclusion = {}) {
  const std::size_t a = problem.left.size();
  const std::size_t b = problem.right.size();
  const std::size_t source = 0;
  const std::size_t left_hub = a + 1;
  const std::size_t right_base = a + 2;
  const std::size_t right_hub = a + b + 2;
  const std::size_t sink = a + b + 3;
  auto left_node = [](std::size_t i) { return 1 + i; };
  auto right_node = [&](std::size_t j) { return right_base + j; };

  const bool forbid_left_del = exclusion.kind == Exclusion::Kind::left_deletion;
  const bool forbid_right_del = exclusion.kind == Exclusion::Kind::right_deletion;
  auto left_deletable = [&](std::size_t i) {
    return problem.left_diag[i] <= threshold &&
           !(forbid_left_del && exclusion.left == i);
  };
  auto right_deletable = [&](std::size_t j) {
    return problem.right_diag[j] <= threshold &&
           !(forbid_right_del && exclusion.right == j);
  };

  detail::MaxFlow flow(a + b + 4);
  const auto big = static_cast<std::int64_t>(a + b + 1);
  for (std::size_t i = 0; i < a; ++i) flow.add_edge(source, left_node(i), 1);
  flow.add_edge(source, left_hub, static_cast<std::int64_t>(b));
  for (std::size_t i = 0; i < a; ++i) {
    const bool del_i = left_deletable(i);
    for (std::size_t j = 0; j < b; ++j) {
      if (exclusion.kind == Exclusion::Kind::pair && exclusion.left == i &&
          exclusion.right == j)
        continue;
      if (del_i && right_deletable(j)) continue;
      if (rho(problem.left[i], problem.right[j]) <= threshold) {
        flow.add_edge(left_node(i), right_node(j), 1);
      }
    }
    if (del_i) flow.add_edge(left_node(i), right_hub, 1);
  }
  for (std::size_t j = 0; j < b; ++j) {
    if (right_deletable(j)) flow.add_edge(left_hub, right_node(j), 1);
  }
  flow.add_edge(left_hub, right_hub, big);
  for (std::size_t j = 0; j < b; ++j) flow.add_edge(right_node(j), sink, 1);
  flow.add_edge(right_hub, sink, static_cast<std::int64_t>(a));

  if (flow.run(source, sink) != static_cast<std::int64_t>(a + b)) {
    return std::nullopt;
  }

  Assignment result;
  result.left_partner.assign(a, kUnmatched);
  result.right_partner.assign(b, kUnmatched);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t e : flow.edges_from(left_node(i))) {
      if (e % 2 != 0 || flow.flow(e) <= 0) continue;
      const std::size_t to = flow.target(e);
      if (to >= right_base && to < right_hub) {
        result.left_partner[i] = to - right_base;
        result.right_partner[to - right_base] = i;
      }
    }
  }
  return result;
}

Matching build_matching(const MatchingProblem& problem,
                        const Assignment& assignment) {
  const std::size_t a = problem.left.size();
  const std::size_t b = problem.right.size();
  Matching m;
  m.left_sequence = problem.left;
  m.right_sequence = problem.right;
  for (std::size_t i = 0; i < a; ++i) {
    const std::size_t j = assignment.left_partner[i];
    if (j != kUnmatched) {
      m.pairs.push_back({i, j, rho(problem.left[i], problem.right[j])});
    } else {
      m.pairs.push_back({i, m.right_sequence.size(), problem.left_diag[i]});
      m.right_sequence.push_back(diagonal_projection(problem.left[i]));
    }
  }
  for (std::size_t j = 0; j < b; ++j) {
    if (assignment.right_partner[j] != kUnmatched) continue;
    m.pairs.push_back({m.left_sequence.size(), j, problem.right_diag[j]});
    m.left_sequence.push_back(diagonal_projection(problem.right[j]));
  }
  for (const auto& p : m.pairs) m.cost = std::max(m.cost, p.cost);
  return m;
}

void check_threshold(double threshold) {
  if (!(threshold >= 0.0)) {
    throw Error(Errc::invalid_argument,
                "threshold must be a non-negative number");
  }
}

}  // namespace

bool feasible(const PersistenceDiagram& left, const PersistenceDiagram& right,
              double threshold) {
  check_threshold(threshold);
  return solve_threshold(MatchingProblem(left, right), threshold).has_value();
}

BottleneckResult bottleneck_distance(const PersistenceDiagram& left,
                                     const PersistenceDiagram& right) {
  const MatchingProblem problem(left, right);
  const CandidateSet candidates = candidate_values(left, right);
  const auto& values = candidates.values;

  // Every copy must go somewhere, so the answer is at least the cheapest
  // option of the most expensive copy.
  double lower = 0.0;
  for (std::size_t i = 0; i < problem.left.size(); ++i) {
    double best = problem.left_diag[i];
    for (const auto& r : problem.right) best = std::min(best, rho(problem.left[i], r));
    lower = std::max(lower, best);
  }
  for (std::size_t j = 0; j < problem.right.size(); ++j) {
    double best = problem.right_diag[j];
    for (const auto& l : problem.left) best = std::min(best, rho(l, problem.right[j]));
    lower = std::max(lower, best);
  }

  // The largest candidate lets every copy be deleted, so it is feasible.
  std::size_t lo = static_cast<std::size_t>(
      std::lower_bound(values.begin(), values.end(), lower) - values.begin());
  std::size_t hi = values.size() - 1;
  std::optional<Assignment> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto found = solve_threshold(problem, values[mid])) {
      hi = mid;
      best = std::move(found);
    } else {
      lo = mid + 1;
    }
  }
  // `best` is the witness at `hi` unless the search never probed it.
  if (!best) best = solve_threshold(problem, values[lo]);

  BottleneckResult result;
  result.distance = values[lo];
  result.matching = build_matching(problem, *best);
  return result;
}

bool optimal_matching_is_unique(const PersistenceDiagram& left,
                                const PersistenceDiagram& right,
                                const BottleneckResult& result) {
  const MatchingProblem problem(left, right);
  const std::size_t a = problem.left.size();
  const std::size_t b = problem.right.size();
  const double d = result.distance;
  for (const auto& p : result.matching.pairs) {
    Exclusion ex;
    if (p.left < a && p.right < b) {
      ex = {Exclusion::Kind::pair, p.left, p.right};
    } else if (p.left < a) {
      ex = {Exclusion::Kind::left_deletion, p.left, 0};
    } else if (p.right < b) {
      ex = {Exclusion::Kind::right_deletion, 0, p.right};
    } else {
      continue;
    }
    if (solve_threshold(problem, d, ex)) return false;
  }
  return true;
}

double oracle_bottleneck(const PersistenceDiagram& left,
                         const PersistenceDiagram& right) {
  const std::uint64_t total = total_multiplicity(left) + total_multiplicity(right);
  if (total > kOracleMaxPoints) {
    throw Error(Errc::size_guard,
                "oracle size guard: total multiplicity " + std::to_string(total) +
                    " exceeds " + std::to_string(kOracleMaxPoints));
  }
  // Each side padded with the other side's diagonal projections.
  std::vector<Point> a = left.expanded();
  std::vector<Point> b = right.expanded();
  const std::vector<Point> a_points = a;
  for (const auto& p : b) a.push_back(diagonal_projection(p));
  for (const auto& p : a_points) b.push_back(diagonal_projection(p));
  const std::size_t k = a.size();
  if (k == 0) return 0.0;

  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, rho(a[i], b[sigma[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::vector<std::size_t> solve_assignment(std::span<const double> cost,
                                          std::size_t n) {
  if (cost.size() != n * n) {
    throw Error(Errc::invalid_argument, "assignment matrix must be n x n");
  }
  // Hungarian method with row/column potentials, 1-based internally.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

WassersteinResult wasserstein_matching(const PersistenceDiagram& left,
                                       const PersistenceDiagram& right,
                                       double q) {
  if (std::isinf(q) && q > 0) {
    BottleneckResult b = bottleneck_distance(left, right);
    return {b.distance, std::move(b.matching)};
  }
  if (!(q >= 1.0)) {
    throw Error(Errc::invalid_argument, "q must be >= 1 or infinity");
  }
  const MatchingProblem problem(left, right);
  const std::size_t a = problem.left.size();
  const std::size_t b = problem.right.size();
  const std::size_t n = a + b;
  Assignment assignment;
  assignment.left_partner.assign(a, kUnmatched);
  assignment.right_partner.assign(b, kUnmatched);
  if (n == 0) return {0.0, build_matching(problem, assignment)};

  // Rows: left copies, then diagonal slots for right copies.
  // Columns: right copies, then diagonal slots for left copies.
  std::vector<double> base(n * n, 0.0);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) base[i * n + j] = rho(problem.left[i], problem.right[j]);
    for (std::size_t j = b; j < n; ++j) base[i * n + j] = problem.left_diag[i];
  }
  for (std::size_t i = a; i < n; ++i) {
    for (std::size_t j = 0; j < b; ++j) base[i * n + j] = problem.right_diag[j];
  }
  const double scale = *std::max_element(base.begin(), base.end());
  if (scale == 0.0) {
    // Identical diagrams: pair every copy with its twin.
    for (std::size_t i = 0; i < a; ++i) {
      assignment.left_partner[i] = i;
      assignment.right_partner[i] = i;
    }
    return {0.0, build_matching(problem, assignment)};
  }

  // Costs are normalised by the largest entry so large q cannot overflow.
  std::vector<double> powered(n * n);
  for (std::size_t k = 0; k < n * n; ++k) powered[k] = std::pow(base[k] / scale, q);
  const auto row_to_col = solve_assignment(powered, n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += powered[i * n + row_to_col[i]];
    if (i < a && row_to_col[i] < b) {
      assignment.left_partner[i] = row_to_col[i];
      assignment.right_partner[row_to_col[i]] = i;
    }
  }
  return {scale * std::pow(sum, 1.0 / q), build_matching(problem, assignment)};
}

double wasserstein_distance(const PersistenceDiagram& left,
                            const PersistenceDiagram& right, double q) {
  return wasserstein_matching(left, right, q).distance;
}

}  // namespace pdiag
