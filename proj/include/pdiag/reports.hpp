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
#include <string>
#include <string_view>
#include <vector>

#include "pdiag/diagram.hpp"

namespace pdiag {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Metric { bottleneck, wasserstein };

struct DistanceOptions {
  Metric metric = Metric::bottleneck;
  double q = 1.0;  // wasserstein only; +infinity allowed
  bool include_matching = false;
  bool oracle_check = false;  // bottleneck only
  bool timing = true;
};

/// Distance under the chosen metric.
double compute_distance(const PersistenceDiagram& left,
                        const PersistenceDiagram& right,
                        const DistanceOptions& options);

/// JSON report for one pair:
///   {"metric", "q", "distance", ["matching"], ["oracle"], "metadata"}.
/// With oracle_check, throws Error{size_guard} when the pair is too large for
/// the brute force and Error{oracle_mismatch} when the answers disagree.
std::string distance_report(const PersistenceDiagram& left,
                            const PersistenceDiagram& right,
                            const DistanceOptions& options);

/// Symmetric matrix (row-major) of pairwise distances; each unordered pair is
/// computed once and mirrored, the diagonal is exactly zero. Independent
/// entries are spread over `threads` workers (0 = hardware concurrency).
std::vector<double> distance_matrix(std::span<const PersistenceDiagram> diagrams,
                                    const DistanceOptions& options,
                                    unsigned threads = 0);

enum class MatrixFormat { json, csv };

std::string matrix_report(std::span<const double> matrix, std::size_t size,
                          const DistanceOptions& options, MatrixFormat format);

struct VerifyOptions {
  std::uint32_t n = 2;
  std::uint32_t m = 0;  // extension suite; 0 means n + 1
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool timing = true;
};

struct VerifyOutcome {
  bool all_passed = false;
  std::string json;
};

/// Names accepted by run_verification.
std::vector<std::string> verification_suites();

/// Runs one suite ("isometry", "extension", "metric-axioms", "oracle") and
/// returns its JSON report. Unknown names throw Error{invalid_argument}.
VerifyOutcome run_verification(std::string_view suite, const VerifyOptions& options);

}  // namespace pdiag
