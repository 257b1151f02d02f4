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

// Exercises libpdiag purely through its C interface.

#include "pdiag/pdiag.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Diagram {
  pd_diagram* ptr = nullptr;
  ~Diagram() { pd_diagram_free(ptr); }
};

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  pd_string_free(s);
  return out;
}

TEST(CApi, ParseSerializeAndInspect) {
  const std::string text = "# x\n1 3\r\n1 3\n5 5 2\n0 2 4\n";
  Diagram d;
  size_t dropped = 99;
  ASSERT_EQ(pd_diagram_parse(text.data(), text.size(), 0, &d.ptr, &dropped), PD_OK);
  EXPECT_EQ(dropped, 1u);
  EXPECT_EQ(pd_diagram_support_size(d.ptr), 2u);
  EXPECT_EQ(pd_diagram_total_multiplicity(d.ptr), 6u);
  double b = 0, e = 0;
  uint64_t m = 0;
  ASSERT_EQ(pd_diagram_entry(d.ptr, 1, &b, &e, &m), PD_OK);
  EXPECT_EQ(b, 1.0);
  EXPECT_EQ(e, 3.0);
  EXPECT_EQ(m, 2u);
  EXPECT_EQ(pd_diagram_entry(d.ptr, 2, &b, &e, &m), PD_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  ASSERT_EQ(pd_diagram_serialize(d.ptr, &out), PD_OK);
  EXPECT_EQ(take(out), "0 2 4\n1 3 2\n");
}

TEST(CApi, ParseErrorReportsLine) {
  const std::string text = "1 3\n4 2\n";
  pd_diagram* d = nullptr;
  EXPECT_EQ(pd_diagram_parse(text.data(), text.size(), 0, &d, nullptr), PD_ERR_PARSE);
  EXPECT_EQ(d, nullptr);
  EXPECT_NE(std::strstr(pd_last_error(), "line 2"), nullptr);
}

TEST(CApi, FromPointsAndDistances) {
  const double births[] = {1.0};
  const double deaths[] = {3.0};
  const double births2[] = {1.5};
  const double deaths2[] = {3.5};
  Diagram a, b, c;
  ASSERT_EQ(pd_diagram_from_points(births, deaths, nullptr, 1, 0, &a.ptr, nullptr), PD_OK);
  ASSERT_EQ(pd_diagram_from_points(births2, deaths2, nullptr, 1, 0, &b.ptr, nullptr), PD_OK);
  ASSERT_EQ(pd_diagram_from_points(births, deaths, nullptr, 1, 0, &c.ptr, nullptr), PD_OK);
  EXPECT_TRUE(pd_diagram_equal(a.ptr, c.ptr));
  EXPECT_FALSE(pd_diagram_equal(a.ptr, b.ptr));

  double d = -1;
  ASSERT_EQ(pd_bottleneck(a.ptr, b.ptr, &d), PD_OK);
  EXPECT_EQ(d, 0.5);
  ASSERT_EQ(pd_oracle_bottleneck(a.ptr, b.ptr, &d), PD_OK);
  EXPECT_EQ(d, 0.5);
  ASSERT_EQ(pd_wasserstein(a.ptr, b.ptr, INFINITY, &d), PD_OK);
  EXPECT_EQ(d, 0.5);
  EXPECT_EQ(pd_wasserstein(a.ptr, b.ptr, 0.5, &d), PD_ERR_INVALID_ARGUMENT);
}

TEST(CApi, InvalidDiagram) {
  const double births[] = {2.0};
  const double deaths[] = {1.0};
  pd_diagram* d = nullptr;
  EXPECT_EQ(pd_diagram_from_points(births, deaths, nullptr, 1, 0, &d, nullptr),
            PD_ERR_INVALID_DIAGRAM);
  const int64_t zero[] = {0};
  const double deaths_ok[] = {3.0};
  EXPECT_EQ(pd_diagram_from_points(births, deaths_ok, zero, 1, 0, &d, nullptr),
            PD_ERR_INVALID_DIAGRAM);
  EXPECT_EQ(pd_diagram_from_points(births, deaths, nullptr, 1, 0, nullptr, nullptr),
            PD_ERR_INVALID_ARGUMENT);
}

TEST(CApi, OracleStatusCodes) {
  const std::string big = "0 1 6\n";
  const std::string other = "0 2 5\n";
  Diagram a, b;
  ASSERT_EQ(pd_diagram_parse(big.data(), big.size(), 0, &a.ptr, nullptr), PD_OK);
  ASSERT_EQ(pd_diagram_parse(other.data(), other.size(), 0, &b.ptr, nullptr), PD_OK);
  double d = 0;
  EXPECT_EQ(pd_oracle_bottleneck(a.ptr, b.ptr, &d), PD_ERR_SIZE_GUARD);
  pd_distance_options options = pd_distance_options_default();
  options.oracle_check = 1;
  char* json = nullptr;
  EXPECT_EQ(pd_distance_report(a.ptr, b.ptr, &options, &json), PD_ERR_SIZE_GUARD);
  EXPECT_EQ(json, nullptr);
}

TEST(CApi, CubeAndReports) {
  const double t[] = {0.0, 0.0};
  Diagram cube;
  ASSERT_EQ(pd_cube_point(2, t, 2, &cube.ptr), PD_OK);
  char* text = nullptr;
  ASSERT_EQ(pd_diagram_serialize(cube.ptr, &text), PD_OK);
  EXPECT_EQ(take(text), "2 5 1\n5 8 1\n");

  const double bad[] = {3.0, 0.0};
  pd_diagram* none = nullptr;
  EXPECT_EQ(pd_cube_point(2, bad, 2, &none), PD_ERR_DOMAIN);

  const pd_diagram* handles[] = {cube.ptr, cube.ptr};
  char* csv = nullptr;
  ASSERT_EQ(pd_matrix_report(handles, 2, nullptr, PD_FORMAT_CSV, &csv), PD_OK);
  EXPECT_EQ(take(csv), "0,0\n0,0\n");

  pd_distance_options options = pd_distance_options_default();
  options.timing = 0;
  options.include_matching = 1;
  char* json = nullptr;
  ASSERT_EQ(pd_distance_report(cube.ptr, cube.ptr, &options, &json), PD_OK);
  const auto report = nlohmann::json::parse(take(json));
  EXPECT_EQ(report["distance"], 0.0);
  EXPECT_EQ(report["matching"].size(), 2u);
}

TEST(CApi, Verify) {
  pd_verify_options options = pd_verify_options_default();
  options.trials = 10;
  options.seed = 3;
  options.timing = 0;
  char* json = nullptr;
  int passed = 0;
  ASSERT_EQ(pd_verify("isometry", &options, &json, &passed), PD_OK);
  EXPECT_EQ(passed, 1);
  const auto report = nlohmann::json::parse(take(json));
  EXPECT_EQ(report["passed"], 10);
  EXPECT_EQ(pd_verify("bogus", &options, &json, &passed), PD_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(pd_last_error()).find("bogus"), std::string::npos);
}

TEST(CApi, Version) { EXPECT_STREQ(pd_version(), "0.1.0"); }

}  // namespace
