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

#include "fokker_planck/chain_compare.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "fokker_planck/solver.hpp"

namespace difflab::fp {

namespace {

void SampleMoments(std::span<const double> x, ChainComparePoint& point) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  point.sample_mean = mean;
  point.sample_skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  point.skewness_stderr = std::sqrt(6.0 / n);
}

}  // namespace

std::vector<ChainComparePoint> chain_vs_pde_compare(
    double u0, const probdiff::NoiseSchedule& schedule, std::size_t n_samples,
    std::span<const std::size_t> steps, const ChainCompareOptions& options) {
  Require(n_samples >= kMinChainSamples, ErrorCode::kInvalidArgument,
          "chain comparison needs at least 10000 samples");
  Require(!schedule.empty(), ErrorCode::kInvalidArgument, "empty schedule");
  const double beta = schedule.beta(1);
  for (double b : schedule.betas()) {
    Require(b == beta, ErrorCode::kInvalidArgument,
            "chain comparison needs a constant-beta schedule");
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    Require(k == 0 || steps[k - 1] < steps[k], ErrorCode::kInvalidArgument,
            "comparison steps must be strictly increasing");
    Require(steps[k] <= schedule.size(), ErrorCode::kOutOfRange,
            "comparison step beyond schedule length");
  }
  Require(options.refine >= 1, ErrorCode::kInvalidArgument, "refine >= 1");
  Require(options.dt_fraction > 0.0 && options.dt_fraction <= 1.0,
          ErrorCode::kInvalidArgument, "dt_fraction must lie in (0, 1]");
  options.grid.validate();

  GridSpec fine = options.grid;
  fine.cells *= options.refine;
  const MomentFields mom = constant_rate_moments(beta);
  const double dt = options.dt_fraction * fp_max_stable_dt(fine, mom, 0.0);
  DensityGrid pde = gaussian_density(fine, u0, 2.0 * fine.h());

  RngStream rng(options.seed);
  std::vector<double> chain(n_samples, u0);
  const double keep = std::sqrt(1.0 - beta);
  const double add = std::sqrt(beta);

  std::vector<ChainComparePoint> out;
  std::size_t at = 0;
  double pde_time = 0.0;
  for (std::size_t target : steps) {
    for (; at < target; ++at) {
      for (double& x : chain) x = keep * x + add * rng.normal();
    }
    ChainComparePoint point;
    point.step = target;
    const double t = static_cast<double>(target);
    if (t > pde_time) {
      FpSolveResult solved = fp_forward_solve(pde, mom, t, dt, pde_time);
      pde = std::move(solved.density);
      point.pde_boundary_mass = solved.boundary_mass;
      pde_time = t;
    }
    const HistogramResult hist = histogram_density(chain, options.grid);
    point.l1 = l1_distance(hist.density, coarsen(pde, options.refine));
    point.outside = hist.outside;
    SampleMoments(chain, point);
    out.push_back(point);
  }
  return out;
}

}  // namespace difflab::fp
