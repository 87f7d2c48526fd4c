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

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "difflab/difflab.h"

namespace {

int Report(dl_status status) {
  if (status == DL_OK) return 0;
  std::fprintf(stderr, "difflab: %s: %s\n", dl_status_name(status),
               dl_last_error());
  return 1;
}

// Prints the log CSV to `output`, or stdout when empty.
int EmitCsv(dl_log* log, const std::string& output) {
  const std::string csv = dl_log_csv(log);
  dl_log_free(log);
  if (output.empty()) {
    std::fwrite(csv.data(), 1, csv.size(), stdout);
    return 0;
  }
  std::FILE* f = std::fopen(output.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "difflab: cannot open %s\n", output.c_str());
    return 1;
  }
  const bool ok = std::fwrite(csv.data(), 1, csv.size(), f) == csv.size();
  if (std::fclose(f) != 0 || !ok) {
    std::fprintf(stderr, "difflab: cannot write %s\n", output.c_str());
    return 1;
  }
  return 0;
}

std::int64_t StepsOrDefault(const std::optional<std::int64_t>& steps) {
  return steps ? *steps : -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic diffusion, Fokker-Planck and osmosis tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dl_version()));

  // probdiff
  std::string pd_input, pd_outdir;
  double pd_beta = 0.02, pd_range = 4.0;
  std::optional<std::int64_t> pd_steps;
  std::vector<std::size_t> pd_record;
  std::uint64_t pd_seed = 0;
  auto* probdiff = app.add_subcommand(
      "probdiff", "Forward noising frames of an image and entropy log");
  probdiff->add_option("input", pd_input, "Input PGM/PPM image")
      ->required()->check(CLI::ExistingFile);
  probdiff->add_option("--outdir", pd_outdir, "Output directory")->required();
  probdiff->add_option("--beta", pd_beta, "Constant noise variance per step")
      ->capture_default_str();
  probdiff->add_option("--steps", pd_steps,
                       "Number of steps (default: last record step)")
      ->check(CLI::NonNegativeNumber);
  probdiff->add_option("--record", pd_record,
                       "Steps to write, comma separated "
                       "(default: 0,1,2,4,8,32,128,512,2048,8192)")
      ->delimiter(',');
  probdiff->add_option("--seed", pd_seed, "Noise seed")->capture_default_str();
  probdiff->add_option("--display-range", pd_range,
                       "Frames map [-r, r] onto [0, maxval]")
      ->capture_default_str();

  // osmosis
  std::string os_input, os_guidance, os_outdir;
  double os_tau = 1.0, os_tol = 1e-9;
  std::optional<std::int64_t> os_steps;
  std::vector<std::size_t> os_record;
  std::size_t os_max_iter = 10000;
  auto* osmosis = app.add_subcommand(
      "osmosis", "Implicit osmosis evolution towards a guidance image");
  osmosis->add_option("input", os_input, "Input PGM/PPM image")
      ->required()->check(CLI::ExistingFile);
  osmosis->add_option("--guidance", os_guidance,
                      "Guidance image path or noise:SEED")->required();
  osmosis->add_option("--outdir", os_outdir, "Output directory")->required();
  osmosis->add_option("--tau", os_tau, "Time step size")->capture_default_str();
  osmosis->add_option("--steps", os_steps,
                      "Number of steps (default: last record step)")
      ->check(CLI::NonNegativeNumber);
  osmosis->add_option("--record", os_record, "Steps to write, comma separated")
      ->delimiter(',');
  osmosis->add_option("--tol", os_tol, "BiCGSTAB relative residual tolerance")
      ->capture_default_str();
  osmosis->add_option("--max-iter", os_max_iter, "BiCGSTAB iteration cap")
      ->capture_default_str();

  // fp-compare
  dl_fp_compare_options fp;
  dl_fp_compare_options_init(&fp);
  std::vector<double> fp_grid;
  std::vector<std::size_t> fp_times;
  std::string fp_output;
  auto* fp_compare = app.add_subcommand(
      "fp-compare", "Monte-Carlo chain against the Fokker-Planck solution");
  fp_compare->add_option("--beta", fp.beta, "Constant beta")->capture_default_str();
  fp_compare->add_option("--u0", fp.u0, "Initial state")->capture_default_str();
  fp_compare->add_option("--samples", fp.samples, "Number of chains")
      ->capture_default_str();
  fp_compare->add_option("--grid", fp_grid, "lo,hi,cells (default -6,6,200)")
      ->delimiter(',')->expected(3);
  fp_compare->add_option("--times", fp_times,
                         "Comparison steps (default 10,50,250)")
      ->delimiter(',');
  fp_compare->add_option("--seed", fp.seed, "Chain seed")->capture_default_str();
  fp_compare->add_option("-o,--output", fp_output, "CSV file (default stdout)");

  // entropy-report
  dl_entropy_report_options er;
  dl_entropy_report_options_init(&er);
  std::string er_schedule, er_output;
  std::optional<double> er_beta;
  std::optional<std::int64_t> er_steps;
  auto* entropy = app.add_subcommand(
      "entropy-report", "Per-step entropy bookkeeping of a noise schedule");
  auto* sched_opt = entropy->add_option(
      "--schedule", er_schedule, "Schedule file, one beta per line")
      ->check(CLI::ExistingFile);
  auto* beta_opt = entropy->add_option("--beta", er_beta, "Constant beta");
  sched_opt->excludes(beta_opt);
  entropy->add_option("--n", er.n, "Dimension")->capture_default_str();
  entropy->add_option("--steps", er_steps, "Number of steps")
      ->check(CLI::NonNegativeNumber);
  entropy->add_option("-o,--output", er_output, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (probdiff->parsed()) {
    dl_probdiff_options o;
    dl_probdiff_options_init(&o);
    o.input = pd_input.c_str();
    o.outdir = pd_outdir.c_str();
    o.beta = pd_beta;
    o.steps = StepsOrDefault(pd_steps);
    o.record = pd_record.data();
    o.record_count = pd_record.size();
    o.seed = pd_seed;
    o.display_range = pd_range;
    return Report(dl_cmd_probdiff(&o, nullptr));
  }
  if (osmosis->parsed()) {
    dl_osmosis_options o;
    dl_osmosis_options_init(&o);
    o.input = os_input.c_str();
    o.guidance = os_guidance.c_str();
    o.outdir = os_outdir.c_str();
    o.tau = os_tau;
    o.steps = StepsOrDefault(os_steps);
    o.record = os_record.data();
    o.record_count = os_record.size();
    o.tol = os_tol;
    o.max_iter = os_max_iter;
    return Report(dl_cmd_osmosis(&o, nullptr));
  }
  if (fp_compare->parsed()) {
    if (!fp_grid.empty()) {
      if (fp_grid[2] < 1.0 || fp_grid[2] != static_cast<double>(
                                  static_cast<std::size_t>(fp_grid[2]))) {
        std::fprintf(stderr, "difflab: --grid cells must be a positive integer\n");
        return 1;
      }
      fp.grid_lo = fp_grid[0];
      fp.grid_hi = fp_grid[1];
      fp.grid_cells = static_cast<std::size_t>(fp_grid[2]);
    }
    fp.times = fp_times.data();
    fp.time_count = fp_times.size();
    dl_log* log = nullptr;
    if (const int rc = Report(dl_cmd_fp_compare(&fp, &log)); rc != 0) return rc;
    return EmitCsv(log, fp_output);
  }
  if (entropy->parsed()) {
    if (!er_schedule.empty()) er.schedule_file = er_schedule.c_str();
    if (er_beta) {
      er.has_beta = 1;
      er.beta = *er_beta;
    }
    er.steps = StepsOrDefault(er_steps);
    dl_log* log = nullptr;
    if (const int rc = Report(dl_cmd_entropy_report(&er, &log)); rc != 0) {
      return rc;
    }
    return EmitCsv(log, er_output);
  }
  return 1;
}
