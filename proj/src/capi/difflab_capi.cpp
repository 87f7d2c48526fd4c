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

#include "difflab/difflab.h"

#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/image_buffer.hpp"
#include "io/commands.hpp"
#include "io/pnm.hpp"
#include "probdiff/entropy.hpp"
#include "probdiff/forward_process.hpp"

struct dl_image {
  difflab::ImageBuffer buffer;
};

struct dl_log {
  std::string csv;
  std::size_t rows = 0;
  std::vector<std::string> files;
};

namespace {

using difflab::ErrorCode;

thread_local std::string g_last_error;

dl_status Fail(dl_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

dl_status FromCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return DL_INVALID_ARGUMENT;
    case ErrorCode::kShapeMismatch: return DL_SHAPE_MISMATCH;
    case ErrorCode::kOutOfRange: return DL_OUT_OF_RANGE;
    case ErrorCode::kIo: return DL_IO;
    case ErrorCode::kFormat: return DL_FORMAT;
    case ErrorCode::kNumerical: return DL_NUMERICAL;
    case ErrorCode::kSolver: return DL_SOLVER;
  }
  return DL_INTERNAL;
}

template <typename Fn>
dl_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return DL_OK;
  } catch (const difflab::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DL_INTERNAL, e.what());
  } catch (...) {
    return Fail(DL_INTERNAL, "unknown error");
  }
}

void NotNull(const void* p, const char* what) {
  difflab::Require(p != nullptr, ErrorCode::kInvalidArgument,
                   std::string(what) + " is NULL");
}

std::vector<std::size_t> Steps(const std::size_t* values, std::size_t count,
                               const std::vector<std::size_t>& fallback) {
  if (count == 0) return fallback;
  NotNull(values, "step list");
  return {values, values + count};
}

std::optional<std::size_t> OptionalSteps(std::int64_t steps) {
  if (steps < 0) return std::nullopt;
  return static_cast<std::size_t>(steps);
}

void Emit(difflab::io::CommandResult result, dl_log** log) {
  if (log == nullptr) return;
  auto* out = new dl_log;
  out->csv = result.log.to_csv();
  out->rows = result.log.rows();
  out->files = std::move(result.files);
  *log = out;
}

difflab::probdiff::NoiseSchedule Schedule(const double* betas,
                                          std::size_t count) {
  if (count > 0) NotNull(betas, "betas");
  return difflab::probdiff::NoiseSchedule(
      std::vector<double>(betas, betas + count));
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "0.1.0"; }

const char* dl_status_name(dl_status status) {
  switch (status) {
    case DL_OK: return "ok";
    case DL_INVALID_ARGUMENT: return "invalid argument";
    case DL_SHAPE_MISMATCH: return "shape mismatch";
    case DL_OUT_OF_RANGE: return "out of range";
    case DL_IO: return "i/o error";
    case DL_FORMAT: return "format error";
    case DL_NUMERICAL: return "numerical error";
    case DL_SOLVER: return "solver failure";
    case DL_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dl_last_error(void) { return g_last_error.c_str(); }

dl_status dl_image_create(size_t width, size_t height, size_t channels,
                          const double* data, dl_image** out) {
  return Guard([&] {
    NotNull(out, "out");
    const difflab::Shape shape{width, height, channels};
    auto img = std::make_unique<dl_image>();
    if (data == nullptr) {
      img->buffer = difflab::ImageBuffer(shape, 0.0);
    } else {
      difflab::ImageBuffer probe(shape, 0.0);
      img->buffer = difflab::ImageBuffer(
          shape, std::vector<double>(data, data + probe.size()));
    }
    *out = img.release();
  });
}

dl_status dl_image_read_pnm(const char* path, dl_image** out, int* maxval) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    auto pnm = difflab::io::read_pnm(path);
    if (maxval != nullptr) *maxval = pnm.maxval;
    *out = new dl_image{std::move(pnm.image)};
  });
}

dl_status dl_image_write_pnm(const dl_image* image, const char* path,
                             int maxval, double* clamped_fraction) {
  return Guard([&] {
    NotNull(image, "image");
    NotNull(path, "path");
    const auto report = difflab::io::write_pnm(image->buffer, path, maxval);
    if (clamped_fraction != nullptr) *clamped_fraction = report.clamped_fraction;
  });
}

dl_status dl_image_shape(const dl_image* image, size_t* width, size_t* height,
                         size_t* channels) {
  return Guard([&] {
    NotNull(image, "image");
    if (width != nullptr) *width = image->buffer.width();
    if (height != nullptr) *height = image->buffer.height();
    if (channels != nullptr) *channels = image->buffer.channels();
  });
}

const double* dl_image_data(const dl_image* image) {
  return image == nullptr ? nullptr : image->buffer.data().data();
}

void dl_image_free(dl_image* image) { delete image; }

const char* dl_log_csv(const dl_log* log) {
  return log == nullptr ? "" : log->csv.c_str();
}

size_t dl_log_rows(const dl_log* log) { return log == nullptr ? 0 : log->rows; }

size_t dl_log_file_count(const dl_log* log) {
  return log == nullptr ? 0 : log->files.size();
}

const char* dl_log_file(const dl_log* log, size_t index) {
  if (log == nullptr || index >= log->files.size()) return nullptr;
  return log->files[index].c_str();
}

void dl_log_free(dl_log* log) { delete log; }

void dl_probdiff_options_init(dl_probdiff_options* o) {
  if (o == nullptr) return;
  const difflab::io::ProbdiffCommand d;
  *o = dl_probdiff_options{nullptr, nullptr, d.beta, -1, nullptr, 0, d.seed,
                           d.display_range};
}

void dl_osmosis_options_init(dl_osmosis_options* o) {
  if (o == nullptr) return;
  const difflab::io::OsmosisCommand d;
  *o = dl_osmosis_options{nullptr, nullptr, nullptr, d.tau, -1, nullptr, 0,
                          d.tol, d.max_iter};
}

void dl_fp_compare_options_init(dl_fp_compare_options* o) {
  if (o == nullptr) return;
  const difflab::io::FpCompareCommand d;
  *o = dl_fp_compare_options{d.beta,     d.u0,    d.samples, d.grid.lo,
                             d.grid.hi,  d.grid.cells, nullptr, 0, d.seed};
}

void dl_entropy_report_options_init(dl_entropy_report_options* o) {
  if (o == nullptr) return;
  *o = dl_entropy_report_options{nullptr, 0, 0.0, 1, -1};
}

dl_status dl_cmd_probdiff(const dl_probdiff_options* o, dl_log** log) {
  return Guard([&] {
    NotNull(o, "options");
    NotNull(o->input, "input");
    NotNull(o->outdir, "outdir");
    difflab::io::ProbdiffCommand cmd;
    cmd.input = o->input;
    cmd.outdir = o->outdir;
    cmd.beta = o->beta;
    cmd.steps = OptionalSteps(o->steps);
    cmd.record = Steps(o->record, o->record_count, difflab::io::kFigureSteps);
    cmd.seed = o->seed;
    cmd.display_range = o->display_range;
    Emit(difflab::io::run_probdiff(cmd), log);
  });
}

dl_status dl_cmd_osmosis(const dl_osmosis_options* o, dl_log** log) {
  return Guard([&] {
    NotNull(o, "options");
    NotNull(o->input, "input");
    NotNull(o->guidance, "guidance");
    NotNull(o->outdir, "outdir");
    difflab::io::OsmosisCommand cmd;
    cmd.input = o->input;
    cmd.guidance = o->guidance;
    cmd.outdir = o->outdir;
    cmd.tau = o->tau;
    cmd.steps = OptionalSteps(o->steps);
    cmd.record = Steps(o->record, o->record_count, difflab::io::kFigureSteps);
    cmd.tol = o->tol;
    cmd.max_iter = o->max_iter;
    Emit(difflab::io::run_osmosis(cmd), log);
  });
}

dl_status dl_cmd_fp_compare(const dl_fp_compare_options* o, dl_log** log) {
  return Guard([&] {
    NotNull(o, "options");
    difflab::io::FpCompareCommand cmd;
    cmd.beta = o->beta;
    cmd.u0 = o->u0;
    cmd.samples = o->samples;
    cmd.grid = {o->grid_lo, o->grid_hi, o->grid_cells};
    cmd.times = Steps(o->times, o->time_count, cmd.times);
    cmd.seed = o->seed;
    Emit(difflab::io::run_fp_compare(cmd), log);
  });
}

dl_status dl_cmd_entropy_report(const dl_entropy_report_options* o,
                                dl_log** log) {
  return Guard([&] {
    NotNull(o, "options");
    difflab::io::EntropyReportCommand cmd;
    if (o->schedule_file != nullptr) cmd.schedule_file = o->schedule_file;
    if (o->has_beta) cmd.beta = o->beta;
    cmd.n = o->n;
    cmd.steps = OptionalSteps(o->steps);
    Emit(difflab::io::run_entropy_report(cmd), log);
  });
}

dl_status dl_admissible_interval(uint64_t n, double* lower, double* upper) {
  return Guard([&] {
    NotNull(lower, "lower");
    NotNull(upper, "upper");
    const auto bounds = difflab::probdiff::admissible_interval(n);
    *lower = bounds.lower;
    *upper = bounds.upper;
  });
}

dl_status dl_entropy_increment(double beta, uint64_t n, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = difflab::probdiff::entropy_increment(beta, n);
  });
}

dl_status dl_conditional_entropy(const double* betas, size_t count, size_t i,
                                 uint64_t n, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    difflab::Require(i >= 1, ErrorCode::kOutOfRange,
                     "conditional entropy of step 0 is -infinity");
    *out = *difflab::probdiff::conditional_entropy(Schedule(betas, count), i, n);
  });
}

dl_status dl_jump_to_step(const dl_image* u0, const double* betas, size_t count,
                          size_t i, const dl_image* noise, dl_image** out) {
  return Guard([&] {
    NotNull(u0, "u0");
    NotNull(noise, "noise");
    NotNull(out, "out");
    *out = new dl_image{difflab::probdiff::jump_to_step(
        u0->buffer, Schedule(betas, count), i, noise->buffer)};
  });
}

}  // extern "C"
