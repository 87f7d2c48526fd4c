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

#include "io/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "json.hpp"

#include "core/error.hpp"
#include "core/rng.hpp"
#include "fokker_planck/chain_compare.hpp"
#include "io/pnm.hpp"
#include "osmosis/drift.hpp"
#include "osmosis/evolution.hpp"
#include "probdiff/entropy.hpp"
#include "probdiff/forward_process.hpp"

namespace difflab::io {

namespace {

namespace fs = std::filesystem;

void MakeDir(const std::string& dir) {
  Require(!dir.empty(), ErrorCode::kInvalidArgument, "output directory not set");
  std::error_code ec;
  fs::create_directories(dir, ec);
  Require(!ec && fs::is_directory(dir), ErrorCode::kIo,
          "cannot create output directory " + dir);
}

std::string FramePath(const std::string& dir, std::size_t step,
                      std::size_t channels) {
  char name[64];
  std::snprintf(name, sizeof(name), "frame_%06zu.%s", step,
                channels == 1 ? "pgm" : "ppm");
  return (fs::path(dir) / name).string();
}

// Record steps up to `last`, which must be strictly increasing.
std::vector<std::size_t> ClipRecord(const std::vector<std::size_t>& record,
                                    std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < record.size(); ++k) {
    Require(k == 0 || record[k - 1] < record[k], ErrorCode::kInvalidArgument,
            "record steps must be strictly increasing");
    if (record[k] <= last) out.push_back(record[k]);
  }
  return out;
}

std::size_t StepCount(const std::optional<std::size_t>& steps,
                      const std::vector<std::size_t>& record) {
  if (steps) return *steps;
  return record.empty() ? 0 : *std::max_element(record.begin(), record.end());
}

double SampleVariance(const ImageBuffer& img, double mean) {
  double s = 0.0;
  for (double v : img.data()) s += (v - mean) * (v - mean);
  return img.size() > 1 ? s / static_cast<double>(img.size() - 1) : 0.0;
}

double SampleMean(const ImageBuffer& img) {
  double s = 0.0;
  for (double v : img.data()) s += v;
  return s / static_cast<double>(img.size());
}

ImageBuffer Offset(const ImageBuffer& img, double delta) {
  ImageBuffer out = img;
  for (double& v : out.data()) v += delta;
  return out;
}

ImageBuffer Plane(const ImageBuffer& img, std::size_t c) {
  return ImageBuffer({img.width(), img.height(), 1}, img.channel(c));
}

std::uint64_t ParseSeed(const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  Require(ec == std::errc() && ptr == end && !text.empty(),
          ErrorCode::kInvalidArgument, "malformed noise seed '" + text + "'");
  return v;
}

}  // namespace

std::vector<std::size_t> parse_step_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t v = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    Require(!item.empty() && ec == std::errc() && ptr == end,
            ErrorCode::kInvalidArgument, "malformed step list '" + text + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

probdiff::NoiseSchedule parse_schedule(const std::string& text) {
  std::vector<double> betas;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    double b = 0.0;
    const auto* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(line.data(), end, b);
    Require(ec == std::errc() && ptr == end, ErrorCode::kFormat,
            "schedule line " + std::to_string(line_no) + ": not a number");
    betas.push_back(b);
  }
  return probdiff::NoiseSchedule(std::move(betas));
}

CommandResult run_probdiff(const ProbdiffCommand& cmd) {
  Require(cmd.beta > 0.0 && cmd.beta < 1.0, ErrorCode::kOutOfRange,
          "beta must lie in (0, 1)");
  Require(cmd.display_range > 0.0, ErrorCode::kInvalidArgument,
          "display range must be > 0");
  const PnmImage input = read_pnm(cmd.input);
  MakeDir(cmd.outdir);

  const std::size_t steps = StepCount(cmd.steps, cmd.record);
  const std::vector<std::size_t> record = ClipRecord(cmd.record, steps);
  const auto schedule = probdiff::NoiseSchedule::constant(cmd.beta, steps);
  const std::uint64_t n = input.image.size();

  ImageBuffer u0 = input.image;
  const double scale = 2.0 / input.maxval;
  for (double& v : u0.data()) v = v * scale - 1.0;

  RngStream rng(cmd.seed);
  const probdiff::TrajectoryRecord traj =
      probdiff::run_trajectory(u0, schedule, record, rng);

  CommandResult result{MetricLog({"step", "beta", "alpha_bar",
                                  "entropy_increment", "admissible",
                                  "admissibility_margin", "conditional_entropy",
                                  "conditional_entropy_gap"}),
                       {}};
  const auto admissibility = probdiff::validate_schedule(schedule, n);
  const double increment = probdiff::entropy_increment(cmd.beta, n);
  for (std::size_t i = 1; i <= steps; ++i) {
    const auto& a = admissibility[i - 1];
    result.log.add_row({static_cast<std::int64_t>(i), cmd.beta,
                        schedule.alpha_bar(i), increment,
                        static_cast<std::int64_t>(a.admissible), a.margin,
                        *probdiff::conditional_entropy(schedule, i, n),
                        probdiff::conditional_entropy_gap(schedule, i, n)});
  }

  const DisplayTransform display{-cmd.display_range, cmd.display_range,
                                 input.maxval};
  MetricLog frames({"step", "file", "mean", "variance", "clamped_fraction"});
  for (const auto& frame : traj.frames) {
    const std::string path =
        FramePath(cmd.outdir, frame.step, frame.image.channels());
    const bool verbatim = frame.step == 0;
    const PnmWriteReport w = write_pnm(
        verbatim ? input.image : to_display(frame.image, display), path,
        input.maxval);
    nlohmann::ordered_json meta;
    meta["step"] = frame.step;
    meta["beta"] = cmd.beta;
    meta["seed"] = cmd.seed;
    meta["input_standardisation"] = "u = 2 x / maxval - 1";
    if (verbatim) {
      meta["display"] = "input samples";
    } else {
      meta["display"] = {{"lo", display.lo}, {"hi", display.hi},
                         {"maxval", display.maxval}};
    }
    meta["clamped_fraction"] = w.clamped_fraction;
    write_text_file(path + ".json", meta.dump(2) + "\n");
    const double mean = SampleMean(frame.image);
    frames.add_row({static_cast<std::int64_t>(frame.step),
                    fs::path(path).filename().string(), mean,
                    SampleVariance(frame.image, mean), w.clamped_fraction});
    result.files.push_back(path);
    result.files.push_back(path + ".json");
  }
  const std::string entropy_csv = (fs::path(cmd.outdir) / "entropy.csv").string();
  const std::string frames_csv = (fs::path(cmd.outdir) / "frames.csv").string();
  result.log.write(entropy_csv);
  frames.write(frames_csv);
  result.files.push_back(entropy_csv);
  result.files.push_back(frames_csv);
  return result;
}

CommandResult run_osmosis(const OsmosisCommand& cmd) {
  Require(cmd.tau > 0.0, ErrorCode::kInvalidArgument, "tau must be > 0");
  const PnmImage input = read_pnm(cmd.input);
  const ImageBuffer f = Offset(input.image, 1.0);
  ImageBuffer v;
  if (cmd.guidance.rfind("noise:", 0) == 0) {
    v = osmosis::positive_noise_guidance(f.shape(),
                                         ParseSeed(cmd.guidance.substr(6)));
  } else {
    v = Offset(read_pnm(cmd.guidance).image, 1.0);
    Require(v.shape() == f.shape(), ErrorCode::kShapeMismatch,
            "guidance image shape differs from input");
  }
  MakeDir(cmd.outdir);

  const std::size_t steps = StepCount(cmd.steps, cmd.record);
  const std::vector<std::size_t> record = ClipRecord(cmd.record, steps);
  const osmosis::DriftField drift = osmosis::canonical_drift(v);
  const ImageBuffer w = osmosis::theoretical_steady_state(f, v);
  std::vector<ImageBuffer> w_planes;
  for (std::size_t c = 0; c < f.channels(); ++c) w_planes.push_back(Plane(w, c));

  CommandResult result{
      MetricLog({"step", "channel", "mean", "relative_entropy", "iterations",
                 "relative_residual", "status"}),
      {}};
  auto log_state = [&](std::size_t step, const ImageBuffer& u,
                       std::span<const linalg::SolveReport> reports) {
    const std::vector<double> means = mean_value(u);
    for (std::size_t c = 0; c < u.channels(); ++c) {
      const linalg::SolveReport rep =
          reports.empty() ? linalg::SolveReport{} : reports[c];
      result.log.add_row(
          {static_cast<std::int64_t>(step), static_cast<std::int64_t>(c),
           means[c], osmosis::relative_entropy(Plane(u, c), w_planes[c]),
           static_cast<std::int64_t>(rep.iterations),
           rep.final_relative_residual,
           std::string(linalg::to_string(rep.status))});
    }
  };
  log_state(0, f, {});

  osmosis::ImplicitOptions options;
  options.tol = cmd.tol;
  options.max_iter = cmd.max_iter;
  std::vector<std::size_t> run_until = record;
  if (run_until.empty() || run_until.back() < steps) run_until.push_back(steps);
  const auto frames =
      osmosis::evolve(f, drift, cmd.tau, run_until, options, log_state);

  auto write_offset = [&](const ImageBuffer& img, const std::string& path) {
    write_pnm(Offset(img, -1.0), path, input.maxval);
    result.files.push_back(path);
  };
  for (const auto& frame : frames) {
    if (!std::binary_search(record.begin(), record.end(), frame.step)) {
      continue;
    }
    const std::string path =
        FramePath(cmd.outdir, frame.step, frame.image.channels());
    write_offset(frame.image, path);
    nlohmann::ordered_json meta;
    meta["step"] = frame.step;
    meta["tau"] = cmd.tau;
    meta["guidance"] = cmd.guidance;
    meta["offset"] = 1;
    meta["maxval"] = input.maxval;
    write_text_file(path + ".json", meta.dump(2) + "\n");
    result.files.push_back(path + ".json");
  }
  const char* ext = f.channels() == 1 ? ".pgm" : ".ppm";
  write_offset(v, (fs::path(cmd.outdir) / (std::string("guidance") + ext)).string());
  write_offset(w, (fs::path(cmd.outdir) / (std::string("steady_state") + ext)).string());
  const std::string csv = (fs::path(cmd.outdir) / "osmosis.csv").string();
  result.log.write(csv);
  result.files.push_back(csv);
  return result;
}

CommandResult run_fp_compare(const FpCompareCommand& cmd) {
  Require(!cmd.times.empty(), ErrorCode::kInvalidArgument, "no comparison times");
  Require(cmd.samples >= 1000, ErrorCode::kInvalidArgument,
          "--samples must be at least 1000");
  const std::size_t last = *std::max_element(cmd.times.begin(), cmd.times.end());
  const auto schedule = probdiff::NoiseSchedule::constant(cmd.beta, last);
  fp::ChainCompareOptions options;
  options.grid = cmd.grid;
  options.seed = cmd.seed;
  const auto points =
      fp::chain_vs_pde_compare(cmd.u0, schedule, cmd.samples, cmd.times, options);
  const auto bounds = probdiff::admissible_interval(1);
  const double margin = std::min(cmd.beta - bounds.lower, bounds.upper - cmd.beta);

  CommandResult result{
      MetricLog({"step", "l1", "outside", "sample_mean", "sample_skewness",
                 "skewness_stderr", "pde_boundary_mass", "beta", "admissible",
                 "admissibility_margin"}),
      {}};
  for (const auto& p : points) {
    result.log.add_row({static_cast<std::int64_t>(p.step), p.l1,
                        static_cast<std::int64_t>(p.outside), p.sample_mean,
                        p.sample_skewness, p.skewness_stderr,
                        p.pde_boundary_mass, cmd.beta,
                        static_cast<std::int64_t>(margin >= 0.0), margin});
  }
  return result;
}

CommandResult run_entropy_report(const EntropyReportCommand& cmd) {
  Require(cmd.schedule_file.has_value() != cmd.beta.has_value(),
          ErrorCode::kInvalidArgument,
          "give exactly one of a schedule file or a constant beta");
  probdiff::NoiseSchedule schedule;
  if (cmd.schedule_file) {
    const auto bytes = read_file(*cmd.schedule_file);
    schedule = parse_schedule(std::string(bytes.begin(), bytes.end()));
    if (cmd.steps) {
      Require(*cmd.steps <= schedule.size(), ErrorCode::kOutOfRange,
              "schedule file has fewer steps than requested");
      schedule = schedule.slice(0, *cmd.steps);
    }
  } else {
    Require(cmd.steps.has_value(), ErrorCode::kInvalidArgument,
            "a constant beta needs a step count");
    schedule = probdiff::NoiseSchedule::constant(*cmd.beta, *cmd.steps);
  }
  const auto admissibility = probdiff::validate_schedule(schedule, cmd.n);

  CommandResult result{
      MetricLog({"step", "beta", "alpha_bar", "one_minus_alpha_bar",
                 "conditional_entropy", "conditional_entropy_gap",
                 "conditional_entropy_increment", "entropy_increment",
                 "admissible", "admissibility_margin"}),
      {}};
  for (std::size_t i = 1; i <= schedule.size(); ++i) {
    const double beta = schedule.beta(i);
    const double inc_cond =
        i >= 2 ? probdiff::conditional_entropy_increment(schedule, i - 1, cmd.n)
               : 0.0;
    result.log.add_row(
        {static_cast<std::int64_t>(i), beta, schedule.alpha_bar(i),
         schedule.complement(i),
         *probdiff::conditional_entropy(schedule, i, cmd.n),
         probdiff::conditional_entropy_gap(schedule, i, cmd.n),
         i >= 2 ? Cell{inc_cond} : Cell{std::string()},
         probdiff::entropy_increment(beta, cmd.n),
         static_cast<std::int64_t>(admissibility[i - 1].admissible),
         admissibility[i - 1].margin});
  }
  return result;
}

}  // namespace difflab::io
