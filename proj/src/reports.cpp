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

#include "pdiag/reports.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include <json.hpp>

#include "pdiag/constructions.hpp"
#include "pdiag/io.hpp"
#include "pdiag/metrics.hpp"
#include "pdiag/sampling.hpp"

namespace pdiag {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json point_json(const Point& p) { return json::array({p.birth, p.death}); }

json diagram_json(const PersistenceDiagram& d) {
  json out = json::array();
  for (const auto& e : d.entries()) {
    out.push_back(json::array({e.point.birth, e.point.death, e.multiplicity}));
  }
  return out;
}

json q_json(const DistanceOptions& options) {
  if (options.metric == Metric::bottleneck) return nullptr;
  if (std::isinf(options.q)) return "infinity";
  return options.q;
}

json matching_json(const Matching& m) {
  json out = json::array();
  for (const auto& p : m.pairs) {
    const Point& a = m.left_sequence[p.left];
    const Point& b = m.right_sequence[p.right];
    out.push_back({{"left", a.is_diagonal() ? json("diagonal") : point_json(a)},
                   {"right", b.is_diagonal() ? json("diagonal") : point_json(b)},
                   {"cost", p.cost}});
  }
  return out;
}

json metadata_json(const DistanceOptions& options, Clock::time_point start) {
  json meta = {{"tool", "pdiag"}, {"version", std::string(kVersion)}, {"rho", "l_inf"}};
  if (options.timing) meta["elapsed_ms"] = elapsed_ms(start);
  return meta;
}

}  // namespace

double compute_distance(const PersistenceDiagram& left,
                        const PersistenceDiagram& right,
                        const DistanceOptions& options) {
  if (options.metric == Metric::wasserstein) {
    return wasserstein_distance(left, right, options.q);
  }
  return bottleneck_distance(left, right).distance;
}

std::string distance_report(const PersistenceDiagram& left,
                            const PersistenceDiagram& right,
                            const DistanceOptions& options) {
  const auto start = Clock::now();
  if (options.oracle_check && options.metric != Metric::bottleneck) {
    throw Error(Errc::invalid_argument,
                "--oracle cross-checks the bottleneck metric only");
  }
  json report;
  Matching matching;
  double distance = 0.0;
  if (options.metric == Metric::wasserstein) {
    auto result = wasserstein_matching(left, right, options.q);
    distance = result.distance;
    matching = std::move(result.matching);
  } else {
    auto result = bottleneck_distance(left, right);
    distance = result.distance;
    matching = std::move(result.matching);
  }
  report["metric"] = options.metric == Metric::bottleneck ? "bottleneck" : "wasserstein";
  report["q"] = q_json(options);
  report["distance"] = distance;
  if (options.include_matching) report["matching"] = matching_json(matching);
  if (options.oracle_check) {
    const double oracle = oracle_bottleneck(left, right);
    if (std::abs(oracle - distance) > 1e-12) {
      throw Error(Errc::oracle_mismatch,
                  "oracle disagreement: exact " + format_number(distance) +
                      " vs brute force " + format_number(oracle));
    }
    report["oracle"] = oracle;
  }
  report["metadata"] = metadata_json(options, start);
  return report.dump();
}

std::vector<double> distance_matrix(std::span<const PersistenceDiagram> diagrams,
                                    const DistanceOptions& options,
                                    unsigned threads) {
  const std::size_t n = diagrams.size();
  std::vector<double> matrix(n * n, 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) work.emplace_back(i, j);
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, work.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < work.size() && !failed; k = next++) {
        const auto [i, j] = work[k];
        const double d = compute_distance(diagrams[i], diagrams[j], options);
        matrix[i * n + j] = d;
        matrix[j * n + i] = d;
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return matrix;
}

std::string matrix_report(std::span<const double> matrix, std::size_t size,
                          const DistanceOptions& options, MatrixFormat format) {
  if (format == MatrixFormat::csv) {
    std::string out;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (j > 0) out += ',';
        out += format_number(matrix[i * size + j]);
      }
      out += '\n';
    }
    return out;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < size; ++i) {
    rows.push_back(json(std::vector<double>(matrix.begin() + i * size,
                                            matrix.begin() + (i + 1) * size)));
  }
  json report = {{"metric", options.metric == Metric::bottleneck ? "bottleneck" : "wasserstein"},
                 {"q", q_json(options)},
                 {"size", size},
                 {"matrix", rows}};
  return report.dump();
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

struct SuiteResult {
  json trials = json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst_deviation = 0.0;
  json counterexample = nullptr;
  json extra = json::object();

  void record(json trial, bool ok, double deviation) {
    worst_deviation = std::max(worst_deviation, deviation);
    trial["passed"] = ok;
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (counterexample.is_null()) counterexample = trial;
    }
    trials.push_back(std::move(trial));
  }
};

SuiteResult isometry_suite(const VerifyOptions& options) {
  const IsometryReport report = verify_cube_isometry(options.n, options.trials, options.seed);
  SuiteResult out;
  for (std::size_t k = 0; k < report.results.size(); ++k) {
    const auto& t = report.results[k];
    json trial = {{"trial", k},
                  {"t", t.t},
                  {"s", t.s},
                  {"bottleneck", t.bottleneck},
                  {"parameter_distance", t.parameter_distance},
                  {"deviation", t.deviation},
                  {"in_candidates", t.in_candidates},
                  {"unique_optimum", t.unique_optimum}};
    if (t.oracle_checked) trial["oracle"] = t.oracle;
    if (t.unique_optimum) trial["vertical"] = t.vertical;
    out.record(std::move(trial), t.passed, t.deviation);
  }
  out.extra["n"] = options.n;
  out.extra["unique_optimum_trials"] = report.unique_optimum_trials;
  out.extra["vertical_trials"] = report.vertical_trials;
  return out;
}

SuiteResult oracle_suite(const VerifyOptions& options) {
  Rng rng(options.seed);
  SuiteResult out;
  for (std::size_t k = 0; k < options.trials; ++k) {
    const auto left = random_diagram(rng, 3, 10.0);
    const auto right = random_diagram(rng, 3, 10.0);
    const auto exact = bottleneck_distance(left, right);
    const double oracle = oracle_bottleneck(left, right);
    const double deviation = std::abs(exact.distance - oracle);
    const bool member = candidate_values(left, right).contains(exact.distance, 1e-12);
    const bool witness = exact.matching.is_bijection() &&
                         exact.matching.recomputed_cost() == exact.distance;
    json trial = {{"trial", k},
                  {"left", diagram_json(left)},
                  {"right", diagram_json(right)},
                  {"exact", exact.distance},
                  {"oracle", oracle},
                  {"deviation", deviation},
                  {"in_candidates", member},
                  {"witness_valid", witness}};
    out.record(std::move(trial), deviation <= 1e-12 && member && witness, deviation);
  }
  return out;
}

SuiteResult metric_axioms_suite(const VerifyOptions& options) {
  Rng rng(options.seed);
  std::bernoulli_distribution reuse(0.15);
  SuiteResult out;
  for (std::size_t k = 0; k < options.trials; ++k) {
    const auto x = random_diagram(rng, 5, 10.0);
    // Occasionally repeat a diagram so the zero-distance branch is exercised.
    const auto y = reuse(rng) ? x : random_diagram(rng, 5, 10.0);
    const auto z = random_diagram(rng, 5, 10.0);
    const PersistenceDiagram* ds[3] = {&x, &y, &z};
    double d[3][3];
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const auto r = bottleneck_distance(*ds[i], *ds[j]);
        d[i][j] = r.distance;
        ok = ok && r.distance >= 0.0 &&
             candidate_values(*ds[i], *ds[j]).contains(r.distance, 1e-12) &&
             ((r.distance == 0.0) == (*ds[i] == *ds[j]));
      }
    }
    double slack = 0.0;
    bool symmetric = true;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        symmetric = symmetric && d[i][j] == d[j][i];
        for (int m = 0; m < 3; ++m) slack = std::max(slack, d[i][m] - (d[i][j] + d[j][m]));
      }
    }
    ok = ok && symmetric && slack <= 1e-9;
    json trial = {{"trial", k},
                  {"x", diagram_json(x)},
                  {"y", diagram_json(y)},
                  {"z", diagram_json(z)},
                  {"d_xy", d[0][1]},
                  {"d_yz", d[1][2]},
                  {"d_xz", d[0][2]},
                  {"symmetric", symmetric},
                  {"triangle_excess", std::max(0.0, slack)}};
    out.record(std::move(trial), ok, std::max(0.0, slack));
  }
  return out;
}

SuiteResult extension_suite(const VerifyOptions& options) {
  const std::uint32_t n = options.n;
  const std::uint32_t m = options.m == 0 ? n + 1 : options.m;
  Rng rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, m - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ExtensionSpec> sample;
  SuiteResult out;
  for (std::size_t k = 0; k < options.trials; ++k) {
    const ExtensionSpec base = random_extension_spec(rng, n, m, true);
    const bool restricts = extend_embedding(base) == diagram_from_points(base.g_points);

    const ExtensionSpec first = random_extension_spec(rng, n, m, false);
    ExtensionSpec second = first;
    const std::uint32_t slot = pick(rng);
    while (second.i_coords[slot] == first.i_coords[slot]) second.i_coords[slot] = unit(rng);
    const bool separates = extend_embedding(first) != extend_embedding(second);

    sample.push_back(base);
    sample.push_back(first);
    sample.push_back(second);
    json trial = {{"trial", k},
                  {"g", [&] {
                     json g = json::array();
                     for (const auto& p : base.g_points) g.push_back(point_json(p));
                     return g;
                   }()},
                  {"restriction_holds", restricts},
                  {"i_first", first.i_coords},
                  {"i_second", second.i_coords},
                  {"distinct_outputs", separates}};
    out.record(std::move(trial), restricts && separates, 0.0);
  }
  const bool injective = extension_is_injective_on(sample);
  out.extra["n"] = n;
  out.extra["m"] = m;
  out.extra["injective_on_sample"] = injective;
  if (!injective) {
    ++out.failed;
    if (out.counterexample.is_null()) out.counterexample = {{"injective_on_sample", false}};
  }
  return out;
}

}  // namespace

std::vector<std::string> verification_suites() {
  return {"isometry", "extension", "metric-axioms", "oracle"};
}

VerifyOutcome run_verification(std::string_view suite, const VerifyOptions& options) {
  const auto start = Clock::now();
  SuiteResult result;
  if (suite == "isometry") {
    result = isometry_suite(options);
  } else if (suite == "extension") {
    result = extension_suite(options);
  } else if (suite == "metric-axioms") {
    result = metric_axioms_suite(options);
  } else if (suite == "oracle") {
    result = oracle_suite(options);
  } else {
    throw Error(Errc::invalid_argument, "unknown suite '" + std::string(suite) + "'");
  }
  json report = {{"suite", std::string(suite)},
                 {"seed", options.seed},
                 {"trials", options.trials},
                 {"passed", result.passed},
                 {"failed", result.failed},
                 {"worst_deviation", result.worst_deviation},
                 {"all_passed", result.failed == 0}};
  report.update(result.extra);
  report["counterexample"] = result.counterexample;
  report["results"] = std::move(result.trials);
  if (options.timing) report["elapsed_ms"] = elapsed_ms(start);
  return {result.failed == 0, report.dump()};
}

}  // namespace pdiag
