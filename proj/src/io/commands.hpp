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

#ifndef DIFFLAB_IO_COMMANDS_HPP_
#define DIFFLAB_IO_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fokker_planck/density_grid.hpp"
#include "io/metric_log.hpp"
#include "probdiff/schedule.hpp"

namespace difflab::io {

inline const std::vector<std::size_t> kFigureSteps = {
    0, 1, 2, 4, 8, 32, 128, 512, 2048, 8192};

// Forward-process frames of one image.
//
// The input samples x in [0, maxval] are standardised to u_0 = 2 x / maxval - 1
// and driven through `steps` steps of constant beta. Step 0 re-emits the input
// samples; every other recorded frame is written through
// DisplayTransform{-4, 4, maxval} as
// <outdir>/frame_<step:06>.pgm|ppm with a JSON sidecar naming the transform.
// <outdir>/entropy.csv holds the per-step entropy bookkeeping and
// <outdir>/frames.csv the sample mean and variance of each written frame.
struct ProbdiffCommand {
  std::string input;
  std::string outdir;
  double beta = 0.02;
  std::optional<std::size_t> steps;  // default: last record step
  std::vector<std::size_t> record = kFigureSteps;
  std::uint64_t seed = 0;
  double display_range = 4.0;
};

// Osmosis evolution of one image.
//
// Input and guidance files are offset by +1 so that all samples are >= 1;
// frames are written back with the offset removed. A guidance of
// "noise:SEED" uses osmosis::positive_noise_guidance, which already lies in
// [1, 256]. Writes frames like ProbdiffCommand plus guidance and steady-state
// images, and <outdir>/osmosis.csv with one row per step and channel.
struct OsmosisCommand {
  std::string input;
  std::string guidance;
  std::string outdir;
  double tau = 1.0;
  std::optional<std::size_t> steps;
  std::vector<std::size_t> record = kFigureSteps;
  double tol = 1e-9;
  std::size_t max_iter = 10000;
};

struct FpCompareCommand {
  double beta = 0.02;
  double u0 = 1.0;
  std::size_t samples = 100000;
  fp::GridSpec grid{-6.0, 6.0, 200};
  std::vector<std::size_t> times = {10, 50, 250};
  std::uint64_t seed = 1;
};

struct EntropyReportCommand {
  std::optional<std::string> schedule_file;  // one beta per line
  std::optional<double> beta;                // constant schedule
  std::uint64_t n = 1;
  std::optional<std::size_t> steps;
};

struct CommandResult {
  MetricLog log;                    // main table
  std::vector<std::string> files;   // every file written
};

CommandResult run_probdiff(const ProbdiffCommand& cmd);
CommandResult run_osmosis(const OsmosisCommand& cmd);
CommandResult run_fp_compare(const FpCompareCommand& cmd);
CommandResult run_entropy_report(const EntropyReportCommand& cmd);

// Plain-text schedule: one beta per line; blank lines and '#' comments are
// skipped.
probdiff::NoiseSchedule parse_schedule(const std::string& text);

// "a,b,c" -> {a, b, c}.
std::vector<std::size_t> parse_step_list(const std::string& text);

}  // namespace difflab::io

#endif  // DIFFLAB_IO_COMMANDS_HPP_
