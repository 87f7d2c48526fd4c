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

#ifndef DIFFLAB_FOKKER_PLANCK_SOLVER_HPP_
#define DIFFLAB_FOKKER_PLANCK_SOLVER_HPP_

#include <cstddef>
#include <functional>

#include "fokker_planck/density_grid.hpp"

namespace difflab::fp {

// Coefficients of  dp/dt = 1/2 d2/du2 (m2 p) + d/du (m1 p).
// With this sign placement m1 points away from the attractor: m1 = +beta u / 2
// pulls mass towards u = 0.
struct MomentFields {
  std::function<double(double u, double t)> m1;
  std::function<double(double u, double t)> m2;
  bool time_independent = false;
};

struct Moments {
  double m1;
  double m2;
};

// Continuum moments of the chain u' = sqrt(1 - beta) u + sqrt(beta) g with
// one chain step per unit time: m1 = beta(t) u / 2, m2 = beta(t).
Moments moments_from_schedule(const std::function<double(double)>& beta_rate,
                              double u, double t);
MomentFields moment_fields(std::function<double(double)> beta_rate,
                           bool time_independent = false);
MomentFields constant_rate_moments(double beta);

struct FpSolveResult {
  DensityGrid density;
  std::size_t steps = 0;
  // Mass in the two outermost cells at the end; above kBoundaryMassWarning the
  // truncated domain is too small.
  double boundary_mass = 0.0;
  bool boundary_warning = false;
  double mass_drift = 0.0;  // |mass(end) - mass(start)|
};

inline constexpr double kBoundaryMassWarning = 1e-6;

// Largest explicit step that keeps the update matrix nonnegative at time t.
// Throws when the grid is too coarse for the drift (a negative off-diagonal
// coefficient no step size can fix).
double fp_max_stable_dt(const GridSpec& spec, const MomentFields& mom,
                        double t);

// Explicit Euler in time, conservative central fluxes in space, zero flux
// through both domain ends. Mass is conserved to rounding and nonnegativity
// holds whenever dt <= fp_max_stable_dt at every step; a larger dt throws.
// Second order in space, first order in time.
FpSolveResult fp_forward_solve(const DensityGrid& p0, const MomentFields& mom,
                               double t_end, double dt, double t_start = 0.0);

}  // namespace difflab::fp

#endif  // DIFFLAB_FOKKER_PLANCK_SOLVER_HPP_
