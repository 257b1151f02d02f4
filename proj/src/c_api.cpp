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

#include "pdiag/pdiag.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "pdiag/constructions.hpp"
#include "pdiag/diagram.hpp"
#include "pdiag/io.hpp"
#include "pdiag/metrics.hpp"
#include "pdiag/reports.hpp"

struct pd_diagram {
  pdiag::PersistenceDiagram value;
};

namespace {

thread_local std::string last_error;

pd_status status_for(pdiag::Errc code) {
  using pdiag::Errc;
  switch (code) {
    case Errc::invalid_point:
    case Errc::invalid_multiplicity:
    case Errc::too_many_points:
      return PD_ERR_INVALID_DIAGRAM;
    case Errc::parse: return PD_ERR_PARSE;
    case Errc::size_guard: return PD_ERR_SIZE_GUARD;
    case Errc::oracle_mismatch: return PD_ERR_ORACLE_MISMATCH;
    case Errc::domain: return PD_ERR_DOMAIN;
    case Errc::representation_too_short:
    case Errc::invalid_argument:
      return PD_ERR_INVALID_ARGUMENT;
  }
  return PD_ERR_INTERNAL;
}

pd_status fail(pd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
pd_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return PD_OK;
  } catch (const pdiag::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PD_ERR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

pdiag::DistanceOptions to_options(const pd_distance_options* options) {
  const pd_distance_options o =
      options != nullptr ? *options : pd_distance_options_default();
  pdiag::DistanceOptions out;
  out.metric = o.metric == PD_METRIC_WASSERSTEIN ? pdiag::Metric::wasserstein
                                                 : pdiag::Metric::bottleneck;
  out.q = o.q;
  out.include_matching = o.include_matching != 0;
  out.oracle_check = o.oracle_check != 0;
  out.timing = o.timing != 0;
  return out;
}

#define PD_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(PD_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* pd_version(void) { return pdiag::kVersion.data(); }

const char* pd_last_error(void) { return last_error.c_str(); }

void pd_string_free(char* s) { std::free(s); }

pd_status pd_diagram_from_points(const double* births, const double* deaths,
                                 const int64_t* multiplicities, size_t count,
                                 int allow_negative, pd_diagram** out,
                                 size_t* dropped_diagonal) {
  PD_REQUIRE(out != nullptr);
  PD_REQUIRE(count == 0 || (births != nullptr && deaths != nullptr));
  return guarded([&] {
    std::vector<pdiag::PointRecord> records(count);
    for (size_t i = 0; i < count; ++i) {
      records[i] = {births[i], deaths[i],
                    multiplicities != nullptr ? multiplicities[i] : 1};
    }
    std::size_t dropped = 0;
    auto d = pdiag::diagram_from_points(
        records, pdiag::DiagramOptions{allow_negative != 0}, &dropped);
    *out = new pd_diagram{std::move(d)};
    if (dropped_diagonal != nullptr) *dropped_diagonal = dropped;
  });
}

pd_status pd_diagram_parse(const char* text, size_t length, int allow_negative,
                           pd_diagram** out, size_t* dropped_diagonal) {
  PD_REQUIRE(out != nullptr);
  PD_REQUIRE(text != nullptr || length == 0);
  return guarded([&] {
    auto parsed = pdiag::parse_diagram(std::string_view(text, length),
                                       pdiag::DiagramOptions{allow_negative != 0});
    *out = new pd_diagram{std::move(parsed.diagram)};
    if (dropped_diagonal != nullptr) *dropped_diagonal = parsed.dropped_diagonal;
  });
}

void pd_diagram_free(pd_diagram* d) { delete d; }

size_t pd_diagram_support_size(const pd_diagram* d) {
  return d != nullptr ? d->value.support_size() : 0;
}

uint64_t pd_diagram_total_multiplicity(const pd_diagram* d) {
  return d != nullptr ? pdiag::total_multiplicity(d->value) : 0;
}

pd_status pd_diagram_entry(const pd_diagram* d, size_t index, double* birth,
                           double* death, uint64_t* multiplicity) {
  PD_REQUIRE(d != nullptr);
  if (index >= d->value.support_size()) {
    return fail(PD_ERR_INVALID_ARGUMENT, "entry index out of range");
  }
  const auto& e = d->value.entries()[index];
  if (birth != nullptr) *birth = e.point.birth;
  if (death != nullptr) *death = e.point.death;
  if (multiplicity != nullptr) *multiplicity = e.multiplicity;
  return PD_OK;
}

int pd_diagram_equal(const pd_diagram* a, const pd_diagram* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

pd_status pd_diagram_serialize(const pd_diagram* d, char** out) {
  PD_REQUIRE(d != nullptr && out != nullptr);
  return guarded([&] { *out = copy_string(pdiag::serialize_diagram(d->value)); });
}

pd_distance_options pd_distance_options_default(void) {
  return pd_distance_options{PD_METRIC_BOTTLENECK, 1.0, 0, 0, 1};
}

pd_status pd_bottleneck(const pd_diagram* left, const pd_diagram* right,
                        double* out) {
  PD_REQUIRE(left != nullptr && right != nullptr && out != nullptr);
  return guarded([&] {
    *out = pdiag::bottleneck_distance(left->value, right->value).distance;
  });
}

pd_status pd_oracle_bottleneck(const pd_diagram* left, const pd_diagram* right,
                               double* out) {
  PD_REQUIRE(left != nullptr && right != nullptr && out != nullptr);
  return guarded([&] { *out = pdiag::oracle_bottleneck(left->value, right->value); });
}

pd_status pd_wasserstein(const pd_diagram* left, const pd_diagram* right,
                         double q, double* out) {
  PD_REQUIRE(left != nullptr && right != nullptr && out != nullptr);
  return guarded([&] {
    *out = pdiag::wasserstein_distance(left->value, right->value, q);
  });
}

pd_status pd_distance_report(const pd_diagram* left, const pd_diagram* right,
                             const pd_distance_options* options,
                             char** json_out) {
  PD_REQUIRE(left != nullptr && right != nullptr && json_out != nullptr);
  return guarded([&] {
    *json_out = copy_string(
        pdiag::distance_report(left->value, right->value, to_options(options)));
  });
}

pd_status pd_matrix_report(const pd_diagram* const* diagrams, size_t count,
                           const pd_distance_options* options,
                           pd_matrix_format format, char** out) {
  PD_REQUIRE(out != nullptr);
  PD_REQUIRE(count == 0 || diagrams != nullptr);
  return guarded([&] {
    std::vector<pdiag::PersistenceDiagram> values;
    values.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (diagrams[i] == nullptr) {
        throw pdiag::Error(pdiag::Errc::invalid_argument,
                           "null diagram at index " + std::to_string(i));
      }
      values.push_back(diagrams[i]->value);
    }
    const auto opts = to_options(options);
    const auto matrix = pdiag::distance_matrix(values, opts);
    *out = copy_string(pdiag::matrix_report(
        matrix, count, opts,
        format == PD_FORMAT_CSV ? pdiag::MatrixFormat::csv : pdiag::MatrixFormat::json));
  });
}

pd_status pd_cube_point(uint32_t n, const double* t, size_t length,
                        pd_diagram** out) {
  PD_REQUIRE(out != nullptr);
  PD_REQUIRE(length == 0 || t != nullptr);
  return guarded([&] {
    pdiag::CubeParams params{n, std::vector<double>(t, t + length)};
    *out = new pd_diagram{pdiag::cube_point(params)};
  });
}

pd_verify_options pd_verify_options_default(void) {
  return pd_verify_options{2, 0, 100, 0, 1};
}

pd_status pd_verify(const char* suite, const pd_verify_options* options,
                    char** json_out, int* all_passed) {
  PD_REQUIRE(suite != nullptr && json_out != nullptr);
  return guarded([&] {
    const pd_verify_options o =
        options != nullptr ? *options : pd_verify_options_default();
    pdiag::VerifyOptions opts{o.n, o.m, o.trials, o.seed, o.timing != 0};
    auto outcome = pdiag::run_verification(suite, opts);
    *json_out = copy_string(outcome.json);
    if (all_passed != nullptr) *all_passed = outcome.all_passed ? 1 : 0;
  });
}

}  // extern "C"
