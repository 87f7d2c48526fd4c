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

#include "fokker_planck/residual.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace difflab::fp {

TransitionKernel gaussian_transition_kernel(double beta) {
  Require(beta > 0.0, ErrorCode::kInvalidArgument, "beta must be positive");
  return [beta](double x, double tau, double y, double t) {
    const double elapsed = t - tau;
    const double mean = x * std::exp(-0.5 * beta * elapsed);
    const double var = -std::expm1(-beta * elapsed);
    const double z = y - mean;
    return std::exp(-0.5 * z * z / var) /
           std::sqrt(2.0 * std::numbers::pi * var);
  };
}

namespace {

void Accumulate(ResidualNorms& norms, double r, double h) {
  norms.max = std::max(norms.max, std::fabs(r));
  norms.l2 += h * r * r;
}

}  // namespace

KernelResiduals fp_backward_residual(const TransitionKernel& kernel,
                                     const MomentFields& mom,
                                     const GridSpec& grid, double tau,
                                     double t, KernelAnchor anchor) {
  grid.validate();
  Require(tau < t, ErrorCode::kInvalidArgument, "residual needs tau < t");
  Require(grid.cells >= 3, ErrorCode::kInvalidArgument,
          "residual grid needs at least 3 cells");
  const double h = grid.h();
  Require(tau + h < t - h, ErrorCode::kInvalidArgument,
          "grid step too large for the time gap t - tau");

  KernelResiduals out;
  out.h = h;
  const double y = anchor.late_state;
  const double x0 = anchor.early_state;
  for (std::size_t k = 1; k + 1 < grid.cells; ++k) {
    // Backward: state x varies, (y, t) fixed.
    {
      const double x = grid.center(k);
      const double pm = kernel(x - h, tau, y, t);
      const double pc = kernel(x, tau, y, t);
      const double pp = kernel(x + h, tau, y, t);
      const double dtau =
          (kernel(x, tau + h, y, t) - kernel(x, tau - h, y, t)) / (2.0 * h);
      const double dx = (pp - pm) / (2.0 * h);
      const double dxx = (pp - 2.0 * pc + pm) / (h * h);
      const double r =
          dtau - (mom.m1(x, tau) * dx - 0.5 * mom.m2(x, tau) * dxx);
      Accumulate(out.backward, r, h);
    }
    // Forward: state y varies, (x0, tau) fixed.
    {
      const double yy = grid.center(k);
      auto q2 = [&](double s) { return mom.m2(s, t) * kernel(x0, tau, s, t); };
      auto q1 = [&](double s) { return mom.m1(s, t) * kernel(x0, tau, s, t); };
      const double dt =
          (kernel(x0, tau, yy, t + h) - kernel(x0, tau, yy, t - h)) / (2.0 * h);
      const double diffusion =
          (q2(yy + h) - 2.0 * q2(yy) + q2(yy - h)) / (h * h);
      const double drift = (q1(yy + h) - q1(yy - h)) / (2.0 * h);
      const double r = dt - (0.5 * diffusion + drift);
      Accumulate(out.forward, r, h);
    }
  }
  out.backward.l2 = std::sqrt(out.backward.l2);
  out.forward.l2 = std::sqrt(out.forward.l2);
  return out;
}

}  // namespace difflab::fp
