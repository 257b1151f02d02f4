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

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "pdiag/constructions.hpp"
#include "pdiag/metrics.hpp"
#include "pdiag/sampling.hpp"

namespace pdiag {
namespace {

using nlohmann::json;
using Records = std::vector<PointRecord>;

PersistenceDiagram dgm(Records r) { return diagram_from_points(r); }

TEST(DistanceReport, BottleneckWithMatching) {
  DistanceOptions options;
  options.include_matching = true;
  options.oracle_check = true;
  options.timing = false;
  const auto report = json::parse(distance_report(dgm({{1, 3, 1}}), dgm({{1.5, 3.5, 1}}), options));
  EXPECT_EQ(report["metric"], "bottleneck");
  EXPECT_TRUE(report["q"].is_null());
  EXPECT_EQ(report["distance"], 0.5);
  EXPECT_EQ(report["oracle"], 0.5);
  ASSERT_EQ(report["matching"].size(), 1u);
  EXPECT_EQ(report["matching"][0]["left"], json::array({1.0, 3.0}));
  EXPECT_EQ(report["matching"][0]["cost"], 0.5);
  EXPECT_EQ(report["metadata"]["rho"], "l_inf");
  EXPECT_FALSE(report["metadata"].contains("elapsed_ms"));
}

TEST(DistanceReport, MatchingCostEqualsDistance) {
  Rng rng(41);
  DistanceOptions options;
  options.include_matching = true;
  options.timing = false;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_diagram(rng, 6, 10.0);
    const auto b = random_diagram(rng, 6, 10.0);
    const auto report = json::parse(distance_report(a, b, options));
    double worst = 0.0;
    for (const auto& pair : report["matching"]) worst = std::max(worst, pair["cost"].get<double>());
    EXPECT_EQ(worst, report["distance"].get<double>());
  }
}

TEST(DistanceReport, DeletionShowsDiagonal) {
  DistanceOptions options;
  options.include_matching = true;
  const auto report = json::parse(distance_report(dgm({{0, 2, 1}}), {}, options));
  EXPECT_EQ(report["distance"], 1.0);
  EXPECT_EQ(report["matching"][0]["right"], "diagonal");
  EXPECT_TRUE(report["metadata"].contains("elapsed_ms"));
}

TEST(DistanceReport, Wasserstein) {
  DistanceOptions options;
  options.metric = Metric::wasserstein;
  options.q = 1.0;
  const auto report = json::parse(distance_report(dgm({{0, 2, 1}, {0, 4, 1}}), {}, options));
  EXPECT_EQ(report["metric"], "wasserstein");
  EXPECT_EQ(report["q"], 1.0);
  EXPECT_DOUBLE_EQ(report["distance"].get<double>(), 3.0);
  options.q = std::numeric_limits<double>::infinity();
  EXPECT_EQ(json::parse(distance_report({}, {}, options))["q"], "infinity");
}

TEST(DistanceReport, OracleErrors) {
  DistanceOptions options;
  options.oracle_check = true;
  try {
    distance_report(dgm({{0, 1, 6}}), dgm({{0, 2, 5}}), options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_guard);
  }
  options.metric = Metric::wasserstein;
  EXPECT_THROW(distance_report({}, {}, options), Error);
}

TEST(DistanceMatrix, SymmetricWithZeroDiagonal) {
  Rng rng(42);
  std::vector<PersistenceDiagram> ds;
  for (int i = 0; i < 6; ++i) ds.push_back(random_diagram(rng, 5, 10.0));
  ds.push_back(ds.front());
  for (unsigned threads : {1u, 4u}) {
    const auto m = distance_matrix(ds, {}, threads);
    const std::size_t n = ds.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(m[i * n + i], 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(m[i * n + j], m[j * n + i]);
        EXPECT_EQ(m[i * n + j], bottleneck_distance(ds[i], ds[j]).distance);
      }
    }
    EXPECT_EQ(m[n - 1], 0.0);
  }
}

TEST(MatrixReport, Formats) {
  const std::vector<PersistenceDiagram> ds{dgm({{0, 2, 1}}), {}};
  const auto m = distance_matrix(ds, {});
  EXPECT_EQ(matrix_report(m, 2, {}, MatrixFormat::csv), "0,1\n1,0\n");
  const auto j = json::parse(matrix_report(m, 2, {}, MatrixFormat::json));
  EXPECT_EQ(j["size"], 2);
  EXPECT_EQ(j["matrix"], json::parse("[[0.0,1.0],[1.0,0.0]]"));
}

TEST(Verification, SuitesPassAndAreDeterministic) {
  VerifyOptions options;
  options.trials = 25;
  options.seed = 7;
  options.timing = false;
  for (const auto& suite : verification_suites()) {
    const auto first = run_verification(suite, options);
    const auto second = run_verification(suite, options);
    EXPECT_TRUE(first.all_passed) << suite;
    EXPECT_EQ(first.json, second.json) << suite;
    const auto report = json::parse(first.json);
    EXPECT_EQ(report["suite"], suite);
    EXPECT_EQ(report["seed"], 7);
    EXPECT_EQ(report["results"].size(), 25u);
    EXPECT_TRUE(report["counterexample"].is_null());
  }
}

TEST(Verification, SeedChangesTrials) {
  VerifyOptions a;
  a.trials = 5;
  a.seed = 1;
  a.timing = false;
  VerifyOptions b = a;
  b.seed = 2;
  EXPECT_NE(run_verification("oracle", a).json, run_verification("oracle", b).json);
}

TEST(Verification, UnknownSuite) {
  try {
    run_verification("nope", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}

}  // namespace
}  // namespace pdiag
