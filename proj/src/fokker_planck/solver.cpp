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

#include "fokker_planck/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "core/error.hpp"

namespace difflab::fp {

namespace {

// Tridiagonal update dp/dt = lower[k] p[k-1] + diag[k] p[k] + upper[k] p[k+1].
struct Stencil {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;
};

void BuildStencil(const GridSpec& spec, const MomentFields& mom, double t,
                  Stencil& st) {
  const std::size_t m = spec.cells;
  const double h = spec.h();
  std::vector<double> d(m);
  for (std::size_t k = 0; k < m; ++k) d[k] = mom.m2(spec.center(k), t);
  st.lower.assign(m, 0.0);
  st.diag.assign(m, 0.0);
  st.upper.assign(m, 0.0);
  // Face k+1/2 between cells k and k+1 carries
  //   F = (d[k+1] p[k+1] - d[k] p[k]) / (2h) + b (p[k] + p[k+1]) / 2,
  // added to cell k and subtracted from cell k+1 (each divided by h).
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double b = mom.m1(spec.face(k + 1), t);
    const double coef_k = (-d[k] / (2.0 * h) + 0.5 * b) / h;
    const double coef_k1 = (d[k + 1] / (2.0 * h) + 0.5 * b) / h;
    st.diag[k] += coef_k;
    st.upper[k] += coef_k1;
    st.lower[k + 1] -= coef_k;
    st.diag[k + 1] -= coef_k1;
  }
}

double StableDt(const Stencil& st) {
  double dt = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < st.diag.size(); ++k) {
    Require(st.lower[k] >= 0.0 && st.upper[k] >= 0.0, ErrorCode::kNumerical,
            "Fokker-Planck grid too coarse for the drift: negative coupling "
            "at cell " + std::to_string(k));
    if (st.diag[k] < 0.0) dt = std::min(dt, -1.0 / st.diag[k]);
  }
  return dt;
}

}  // namespace

Moments moments_from_schedule(const std::function<double(double)>& beta_rate,
                              double u, double t) {
  const double b = beta_rate(t);
  Require(b > 0.0, ErrorCode::kInvalidArgument, "beta rate must be positive");
  return {0.5 * b * u, b};
}

MomentFields moment_fields(std::function<double(double)> beta_rate,
                           bool time_independent) {
  MomentFields mom;
  mom.m1 = [beta_rate](double u, double t) {
    return moments_from_schedule(beta_rate, u, t).m1;
  };
  mom.m2 = [beta_rate](double u, double t) {
    return moments_from_schedule(beta_rate, u, t).m2;
  };
  mom.time_independent = time_independent;
  return mom;
}

MomentFields constant_rate_moments(double beta) {
  Require(beta > 0.0, ErrorCode::kInvalidArgument, "beta must be positive");
  return moment_fields([beta](double) { return beta; }, true);
}

double fp_max_stable_dt(const GridSpec& spec, const MomentFields& mom,
                        double t) {
  spec.validate();
  Stencil st;
  BuildStencil(spec, mom, t, st);
  return StableDt(st);
}

FpSolveResult fp_forward_solve(const DensityGrid& p0, const MomentFields& mom,
                               double t_end, double dt, double t_start) {
  Require(dt > 0.0, ErrorCode::kInvalidArgument, "dt must be positive");
  Require(t_end >= t_start, ErrorCode::kInvalidArgument,
          "t_end precedes t_start");
  const GridSpec& spec = p0.spec();
  const std::size_t m = spec.cells;
  const double initial_mass = p0.mass();

  std::vector<double> p = p0.values();
  std::vector<double> next(m);
  Stencil st;
  FpSolveResult result{p0};
  double t = t_start;
  const double span = t_end - t_start;
  const auto steps =
      static_cast<std::size_t>(std::ceil(span / dt * (1.0 - 1e-12)));
  for (std::size_t s = 0; s < steps; ++s) {
    const double step = std::min(dt, t_end - t);
    if (s == 0 || !mom.time_independent) {
      BuildStencil(spec, mom, t, st);
      const double limit = StableDt(st);
      if (step > limit) {
        std::ostringstream msg;
        msg << "Fokker-Planck step " << step << " exceeds the stability limit "
            << limit << " at t = " << t;
        Fail(ErrorCode::kNumerical, msg.str());
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      double rate = st.diag[k] * p[k];
      if (k > 0) rate += st.lower[k] * p[k - 1];
      if (k + 1 < m) rate += st.upper[k] * p[k + 1];
      next[k] = p[k] + step * rate;
    }
    std::swap(p, next);
    t += step;
  }

  for (double& v : p) v = std::max(v, 0.0);  // clears -0.0 and rounding dust
  result.density = DensityGrid(spec, std::move(p));
  result.steps = steps;
  const auto& vals = result.density.values();
  result.boundary_mass = (vals.front() + vals.back()) * spec.h();
  result.boundary_warning = result.boundary_mass > kBoundaryMassWarning;
  result.mass_drift = std::fabs(result.density.mass() - initial_mass);
  return result;
}

}  // namespace difflab::fp
