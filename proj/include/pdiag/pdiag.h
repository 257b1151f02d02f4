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

/*
 * C interface to the pdiag library.
 *
 * Diagrams are opaque handles owned by the caller and released with
 * pd_diagram_free. Strings returned through `char**` out-parameters are
 * allocated by the library and released with pd_string_free. Every fallible
 * call returns a pd_status; on failure pd_last_error() describes the problem
 * for the calling thread until its next library call.
 */
#ifndef PDIAG_PDIAG_H_
#define PDIAG_PDIAG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PDIAG_BUILDING_LIBRARY)
#define PDIAG_API __declspec(dllexport)
#else
#define PDIAG_API __declspec(dllimport)
#endif
#else
#define PDIAG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_ERR_INVALID_ARGUMENT = 1,
  PD_ERR_PARSE = 2,
  PD_ERR_SIZE_GUARD = 3,
  PD_ERR_ORACLE_MISMATCH = 4,
  PD_ERR_INVALID_DIAGRAM = 5, /* bad point, multiplicity or size */
  PD_ERR_DOMAIN = 6,          /* construction parameters out of range */
  PD_ERR_INTERNAL = 7
} pd_status;

typedef enum pd_metric {
  PD_METRIC_BOTTLENECK = 0,
  PD_METRIC_WASSERSTEIN = 1
} pd_metric;

typedef enum pd_matrix_format {
  PD_FORMAT_JSON = 0,
  PD_FORMAT_CSV = 1
} pd_matrix_format;

typedef struct pd_diagram pd_diagram;

typedef struct pd_distance_options {
  pd_metric metric;
  double q;              /* wasserstein exponent, >= 1 or INFINITY */
  int include_matching;  /* nonzero: add the witness matching */
  int oracle_check;      /* nonzero: cross-check against the brute force */
  int timing;            /* nonzero: add elapsed time to metadata */
} pd_distance_options;

typedef struct pd_verify_options {
  uint32_t n;
  uint32_t m; /* extension suite; 0 means n + 1 */
  size_t trials;
  uint64_t seed;
  int timing;
} pd_verify_options;

PDIAG_API const char* pd_version(void);
PDIAG_API const char* pd_last_error(void);
PDIAG_API void pd_string_free(char* s);

/* Diagrams. Diagonal records are dropped; `dropped_diagonal` may be NULL. */
PDIAG_API pd_status pd_diagram_from_points(const double* births,
                                           const double* deaths,
                                           const int64_t* multiplicities,
                                           size_t count, int allow_negative,
                                           pd_diagram** out,
                                           size_t* dropped_diagonal);
PDIAG_API pd_status pd_diagram_parse(const char* text, size_t length,
                                     int allow_negative, pd_diagram** out,
                                     size_t* dropped_diagonal);
PDIAG_API void pd_diagram_free(pd_diagram* d);
PDIAG_API size_t pd_diagram_support_size(const pd_diagram* d);
PDIAG_API uint64_t pd_diagram_total_multiplicity(const pd_diagram* d);
PDIAG_API pd_status pd_diagram_entry(const pd_diagram* d, size_t index,
                                     double* birth, double* death,
                                     uint64_t* multiplicity);
PDIAG_API int pd_diagram_equal(const pd_diagram* a, const pd_diagram* b);
PDIAG_API pd_status pd_diagram_serialize(const pd_diagram* d, char** out);

/* Distances. */
PDIAG_API pd_distance_options pd_distance_options_default(void);
PDIAG_API pd_status pd_bottleneck(const pd_diagram* left,
                                  const pd_diagram* right, double* out);
PDIAG_API pd_status pd_oracle_bottleneck(const pd_diagram* left,
                                         const pd_diagram* right, double* out);
PDIAG_API pd_status pd_wasserstein(const pd_diagram* left,
                                   const pd_diagram* right, double q,
                                   double* out);
PDIAG_API pd_status pd_distance_report(const pd_diagram* left,
                                       const pd_diagram* right,
                                       const pd_distance_options* options,
                                       char** json_out);
PDIAG_API pd_status pd_matrix_report(const pd_diagram* const* diagrams,
                                     size_t count,
                                     const pd_distance_options* options,
                                     pd_matrix_format format, char** out);

/* Constructions. */
PDIAG_API pd_status pd_cube_point(uint32_t n, const double* t, size_t length,
                                  pd_diagram** out);

/* Verification suites: "isometry", "extension", "metric-axioms", "oracle".
 * `all_passed` receives 1 when every trial passed. */
PDIAG_API pd_verify_options pd_verify_options_default(void);
PDIAG_API pd_status pd_verify(const char* suite,
                              const pd_verify_options* options,
                              char** json_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PDIAG_PDIAG_H_ */
