// Copyright 2026 The difflab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to difflab. All functions return a dl_status; on failure the
 * message is available from dl_last_error() on the calling thread. Handles
 * are opaque and owned by the caller once returned. */
#ifndef DIFFLAB_DIFFLAB_H_
#define DIFFLAB_DIFFLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(DIFFLAB_BUILDING_LIBRARY)
#define DL_API __attribute__((visibility("default")))
#else
#define DL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_INVALID_ARGUMENT = 1,
  DL_SHAPE_MISMATCH = 2,
  DL_OUT_OF_RANGE = 3,
  DL_IO = 4,
  DL_FORMAT = 5,
  DL_NUMERICAL = 6,
  DL_SOLVER = 7,
  DL_INTERNAL = 100
} dl_status;

DL_API const char* dl_version(void);
DL_API const char* dl_status_name(dl_status status);
/* Message of the last failed call on this thread, "" if none. */
DL_API const char* dl_last_error(void);

/* ---- images ------------------------------------------------------------ */

typedef struct dl_image dl_image;

/* Row-major, channels interleaved. `data` may be NULL for a zero image. */
DL_API dl_status dl_image_create(size_t width, size_t height, size_t channels,
                                 const double* data, dl_image** out);
/* `maxval` may be NULL. */
DL_API dl_status dl_image_read_pnm(const char* path, dl_image** out,
                                   int* maxval);
/* `clamped_fraction` may be NULL. */
DL_API dl_status dl_image_write_pnm(const dl_image* image, const char* path,
                                    int maxval, double* clamped_fraction);
DL_API dl_status dl_image_shape(const dl_image* image, size_t* width,
                                size_t* height, size_t* channels);
DL_API const double* dl_image_data(const dl_image* image);
DL_API void dl_image_free(dl_image* image);

/* ---- metric logs ------------------------------------------------------- */

typedef struct dl_log dl_log;

/* CSV text of the log; valid until dl_log_free. */
DL_API const char* dl_log_csv(const dl_log* log);
DL_API size_t dl_log_rows(const dl_log* log);
/* Number of files written by the command that produced the log. */
DL_API size_t dl_log_file_count(const dl_log* log);
DL_API const char* dl_log_file(const dl_log* log, size_t index);
DL_API void dl_log_free(dl_log* log);

/* ---- commands ---------------------------------------------------------- */

/* Negative `steps` means "last record step". A NULL `record` with
 * record_count 0 selects {0,1,2,4,8,32,128,512,2048,8192}. */
typedef struct dl_probdiff_options {
  const char* input;
  const char* outdir;
  double beta;
  int64_t steps;
  const size_t* record;
  size_t record_count;
  uint64_t seed;
  double display_range;
} dl_probdiff_options;

typedef struct dl_osmosis_options {
  const char* input;
  const char* guidance; /* image path or "noise:SEED" */
  const char* outdir;
  double tau;
  int64_t steps;
  const size_t* record;
  size_t record_count;
  double tol;
  size_t max_iter;
} dl_osmosis_options;

typedef struct dl_fp_compare_options {
  double beta;
  double u0;
  size_t samples;
  double grid_lo;
  double grid_hi;
  size_t grid_cells;
  const size_t* times;
  size_t time_count;
  uint64_t seed;
} dl_fp_compare_options;

/* Exactly one of schedule_file (non-NULL) or has_beta must be set. */
typedef struct dl_entropy_report_options {
  const char* schedule_file;
  int has_beta;
  double beta;
  uint64_t n;
  int64_t steps;
} dl_entropy_report_options;

DL_API void dl_probdiff_options_init(dl_probdiff_options* options);
DL_API void dl_osmosis_options_init(dl_osmosis_options* options);
DL_API void dl_fp_compare_options_init(dl_fp_compare_options* options);
DL_API void dl_entropy_report_options_init(dl_entropy_report_options* options);

/* `log` may be NULL when the table is not needed. */
DL_API dl_status dl_cmd_probdiff(const dl_probdiff_options* options,
                                 dl_log** log);
DL_API dl_status dl_cmd_osmosis(const dl_osmosis_options* options,
                                dl_log** log);
DL_API dl_status dl_cmd_fp_compare(const dl_fp_compare_options* options,
                                   dl_log** log);
DL_API dl_status dl_cmd_entropy_report(const dl_entropy_report_options* options,
                                       dl_log** log);

/* ---- numerics ---------------------------------------------------------- */

DL_API dl_status dl_admissible_interval(uint64_t n, double* lower,
                                        double* upper);
DL_API dl_status dl_entropy_increment(double beta, uint64_t n, double* out);
/* Conditional entropy of step i (1-based) of the schedule `betas`. */
DL_API dl_status dl_conditional_entropy(const double* betas, size_t count,
                                        size_t i, uint64_t n, double* out);
/* Forward process: u_i = sqrt(alpha_bar_i) u_0 + sqrt(1 - alpha_bar_i) g. */
DL_API dl_status dl_jump_to_step(const dl_image* u0, const double* betas,
                                 size_t count, size_t i, const dl_image* noise,
                                 dl_image** out);

#ifdef __cplusplus
}
#endif

#endif /* DIFFLAB_DIFFLAB_H_ */
