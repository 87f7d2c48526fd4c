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

#ifndef DIFFLAB_FOKKER_PLANCK_RESIDUAL_HPP_
#define DIFFLAB_FOKKER_PLANCK_RESIDUAL_HPP_

#include <functional>

#include "fokker_planck/density_grid.hpp"
#include "fokker_planck/solver.hpp"

namespace difflab::fp {

// Transition density p(y, t | x, tau) for tau < t.
using TransitionKernel =
    std::function<double(double x, double tau, double y, double t)>;

// Closed-form kernel of the forward chain in the continuum limit with a
// constant rate: N(y; x exp(-beta (t - tau) / 2), 1 - exp(-beta (t - tau))).
// It is the 0 -> i transition of the chain with alpha_bar replaced by
// exp(-beta (t - tau)).
TransitionKernel gaussian_transition_kernel(double beta);

struct ResidualNorms {
  double max = 0.0;
  double l2 = 0.0;  // sqrt(h * sum r^2)
};

struct KernelResiduals {
  // dp/dtau - (m1 dp/dx - 1/2 m2 d2p/dx2), as a function of (x, tau) with
  // (y, t) held fixed.
  ResidualNorms backward;
  // dp/dt - (1/2 d2/dy2 (m2 p) + d/dy (m1 p)), as a function of (y, t) with
  // (x, tau) held fixed.
  ResidualNorms forward;
  double h = 0.0;
};

struct KernelAnchor {
  double early_state = 0.5;  // x, held fixed in the forward residual
  double late_state = 0.3;   // y, held fixed in the backward residual
};

// Evaluates both Kolmogorov residuals of `kernel` with second-order central
// differences of step h = grid.h() in state and time, on the interior cell
// centres of `grid`. The residuals of an exact kernel are O(h^2).
KernelResiduals fp_backward_residual(const TransitionKernel& kernel,
                                     const MomentFields& mom,
                                     const GridSpec& grid, double tau,
                                     double t, KernelAnchor anchor = {});

}  // namespace difflab::fp

#endif  // DIFFLAB_FOKKER_PLANCK_RESIDUAL_HPP_
