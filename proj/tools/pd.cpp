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

// Command-line front end: `pd dist`, `pd matrix`, `pd cube`, `pd verify`.
// Links only the C interface of libpdiag.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdiag/pdiag.h"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;  // also bad input files
constexpr int kSizeGuard = 3;
constexpr int kOracleMismatch = 4;

struct DiagramDeleter {
  void operator()(pd_diagram* d) const { pd_diagram_free(d); }
};
using DiagramPtr = std::unique_ptr<pd_diagram, DiagramDeleter>;

struct StringDeleter {
  void operator()(char* s) const { pd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(pd_status status) {
  switch (status) {
    case PD_OK: return kOk;
    case PD_ERR_SIZE_GUARD: return kSizeGuard;
    case PD_ERR_ORACLE_MISMATCH: return kOracleMismatch;
    case PD_ERR_INTERNAL: return 70;
    default: return kUsage;
  }
}

int report_failure(pd_status status, const std::string& context = {}) {
  std::cerr << "pd: " << (context.empty() ? "" : context + ": ") << pd_last_error() << '\n';
  return exit_code_for(status);
}

struct LoadOptions {
  bool allow_negative = false;
  bool warnings = false;
};

// Returns nullptr after printing a diagnostic.
DiagramPtr load_diagram(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pd: " << path << ": cannot open file\n";
    return nullptr;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  pd_diagram* raw = nullptr;
  std::size_t dropped = 0;
  const pd_status status = pd_diagram_parse(text.data(), text.size(),
                                            options.allow_negative ? 1 : 0, &raw, &dropped);
  if (status != PD_OK) {
    std::cerr << "pd: " << path << ": " << pd_last_error() << '\n';
    return nullptr;
  }
  if (options.warnings && dropped > 0) {
    std::cerr << "pd: warning: " << path << ": dropped " << dropped
              << " diagonal record" << (dropped == 1 ? "" : "s") << '\n';
  }
  return DiagramPtr(raw);
}

bool parse_q(const std::string& text, double& q) {
  if (text == "inf" || text == "infinity") {
    q = INFINITY;
    return true;
  }
  try {
    std::size_t used = 0;
    q = std::stod(text, &used);
    return used == text.size();
  } catch (const std::exception&) {
    return false;
  }
}

struct MetricFlags {
  std::string metric = "bottleneck";
  std::string q = "1";

  void attach(CLI::App* cmd) {
    cmd->add_option("--metric", metric, "bottleneck or wasserstein")
        ->check(CLI::IsMember({"bottleneck", "wasserstein"}));
    cmd->add_option("--q", q, "Wasserstein exponent (>= 1, or 'inf')");
  }

  bool apply(pd_distance_options& options) const {
    options.metric = metric == "wasserstein" ? PD_METRIC_WASSERSTEIN : PD_METRIC_BOTTLENECK;
    if (!parse_q(q, options.q)) {
      std::cerr << "pd: invalid --q value '" << q << "'\n";
      return false;
    }
    return true;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence diagram distances and cube-family checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pd_version()));

  LoadOptions load;
  auto add_load_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--relaxed", load.allow_negative, "Accept negative coordinates");
    cmd->add_flag("--warnings", load.warnings, "Report dropped diagonal records");
  };

  // dist
  auto* dist = app.add_subcommand("dist", "Distance between two diagram files");
  std::string left_path, right_path;
  MetricFlags dist_metric;
  bool matching = false, oracle = false, no_timing = false;
  dist->add_option("left", left_path)->required();
  dist->add_option("right", right_path)->required();
  dist_metric.attach(dist);
  dist->add_flag("--matching", matching, "Include the optimal matching");
  dist->add_flag("--oracle", oracle, "Cross-check against the brute-force oracle");
  dist->add_flag("--no-timing", no_timing, "Omit timing from the report");
  add_load_flags(dist);

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix");
  std::vector<std::string> paths;
  std::string format = "json";
  MetricFlags matrix_metric;
  matrix->add_option("files", paths)->required()->expected(2, -1);
  matrix->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  matrix_metric.attach(matrix);
  add_load_flags(matrix);

  // cube
  auto* cube = app.add_subcommand("cube", "Emit one member of the cube family");
  std::uint32_t cube_n = 1;
  std::vector<double> cube_t;
  cube->add_option("--n", cube_n, "Cube dimension")->required();
  cube->add_option("--t", cube_t, "Parameters t_1 .. t_n in [0, n]")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  pd_verify_options vopts = pd_verify_options_default();
  bool verify_no_timing = false;
  verify->add_option("suite", suite, "isometry | extension | metric-axioms | oracle")->required();
  verify->add_option("--n", vopts.n, "Cube / stratum index")->capture_default_str();
  verify->add_option("--m", vopts.m, "Embedding dimension (extension; default n + 1)");
  verify->add_option("--trials", vopts.trials)->capture_default_str();
  verify->add_option("--seed", vopts.seed, "Generator seed")->required();
  verify->add_flag("--no-timing", verify_no_timing, "Omit timing from the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*dist) {
    auto left = load_diagram(left_path, load);
    auto right = left ? load_diagram(right_path, load) : nullptr;
    if (!left || !right) return kUsage;
    pd_distance_options options = pd_distance_options_default();
    if (!dist_metric.apply(options)) return kUsage;
    options.include_matching = matching;
    options.oracle_check = oracle;
    options.timing = !no_timing;
    char* json = nullptr;
    const pd_status status = pd_distance_report(left.get(), right.get(), &options, &json);
    if (status != PD_OK) return report_failure(status);
    OwnedString owned(json);
    std::cout << json << '\n';
    return kOk;
  }

  if (*matrix) {
    std::vector<DiagramPtr> diagrams;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      auto d = load_diagram(paths[i], load);
      if (!d) {
        std::cerr << "pd: failed to load input " << i << '\n';
        return kUsage;
      }
      diagrams.push_back(std::move(d));
    }
    std::vector<const pd_diagram*> handles;
    for (const auto& d : diagrams) handles.push_back(d.get());
    pd_distance_options options = pd_distance_options_default();
    if (!matrix_metric.apply(options)) return kUsage;
    char* out = nullptr;
    const pd_status status =
        pd_matrix_report(handles.data(), handles.size(), &options,
                         format == "csv" ? PD_FORMAT_CSV : PD_FORMAT_JSON, &out);
    if (status != PD_OK) return report_failure(status);
    OwnedString owned(out);
    std::cout << out;
    if (format == "json") std::cout << '\n';
    return kOk;
  }

  if (*cube) {
    pd_diagram* raw = nullptr;
    const pd_status status = pd_cube_point(cube_n, cube_t.data(), cube_t.size(), &raw);
    if (status != PD_OK) return report_failure(status, "cube");
    DiagramPtr d(raw);
    char* text = nullptr;
    if (pd_status s = pd_diagram_serialize(d.get(), &text); s != PD_OK) return report_failure(s);
    OwnedString owned(text);
    std::cout << text;
    return kOk;
  }

  if (*verify) {
    vopts.timing = verify_no_timing ? 0 : 1;
    char* json = nullptr;
    int all_passed = 0;
    const pd_status status = pd_verify(suite.c_str(), &vopts, &json, &all_passed);
    if (status != PD_OK) return report_failure(status, "verify");
    OwnedString owned(json);
    std::cout << json << '\n';
    return all_passed ? kOk : kVerifyFailed;
  }
  return kUsage;
}
