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

#ifndef DIFFLAB_FOKKER_PLANCK_CHAIN_COMPARE_HPP_
#define DIFFLAB_FOKKER_PLANCK_CHAIN_COMPARE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fokker_planck/density_grid.hpp"
#include "probdiff/schedule.hpp"

namespace difflab::fp {

struct ChainCompareOptions {
  GridSpec grid{-6.0, 6.0, 200};  // histogram grid
  // The PDE runs on a grid `refine` times finer and is merged back onto
  // `grid` before comparison.
  std::size_t refine = 4;
  double dt_fraction = 0.5;  // PDE step as a fraction of the stability limit
  std::uint64_t seed = 1;
};

struct ChainComparePoint {
  std::size_t step = 0;
  double l1 = 0.0;
  std::size_t outside = 0;  // chain samples beyond the grid
  double sample_mean = 0.0;
  double sample_skewness = 0.0;
  double skewness_stderr = 0.0;  // sqrt(6 / N)
  double pde_boundary_mass = 0.0;
};

inline constexpr std::size_t kMinChainSamples = 10000;

// Runs `n_samples` independent scalar chains u' = sqrt(1 - beta) u +
// sqrt(beta) g from u0 and, alongside, the Fokker-Planck equation with the
// matching constant-rate moments (one chain step per unit time) started from
// N(u0, (2 h_fine)^2). Returns the L1 distance between the chain histogram
// and the PDE density at each requested step.
std::vector<ChainComparePoint> chain_vs_pde_compare(
    double u0, const probdiff::NoiseSchedule& schedule, std::size_t n_samples,
    std::span<const std::size_t> steps, const ChainCompareOptions& options = {});

}  // namespace difflab::fp

#endif  // DIFFLAB_FOKKER_PLANCK_CHAIN_COMPARE_HPP_
