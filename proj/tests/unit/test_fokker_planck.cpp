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

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

#include "core/rng.hpp"
#include "fokker_planck/chain_compare.hpp"
#include "fokker_planck/density_grid.hpp"
#include "fokker_planck/residual.hpp"
#include "fokker_planck/solver.hpp"

namespace difflab::fp {
namespace {

using testing::ThrownCode;

double Phi(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double Density(double x, double mean, double var) {
  return std::exp(-0.5 * (x - mean) * (x - mean) / var) /
         std::sqrt(2.0 * std::numbers::pi * var);
}

TEST_CASE("grid spec and density grid basics") {
  const GridSpec g{-1.0, 1.0, 4};
  CHECK(g.h() == 0.5);
  CHECK(g.center(0) == -0.75);
  CHECK(g.face(4) == 1.0);
  CHECK(ThrownCode([] { GridSpec{1.0, -1.0, 4}.validate(); }).has_value());
  CHECK(ThrownCode([] { GridSpec{-1.0, 1.0, 0}.validate(); }).has_value());

  DensityGrid d(g, {0.0, 1.0, 1.0, 0.0});
  CHECK(d.mass() == 1.0);
  CHECK(d.mean() == doctest::Approx(0.0));
  CHECK(d.variance() == doctest::Approx(0.0625));
  d.values()[0] = 2.0;
  d.normalise();
  CHECK(d.mass() == doctest::Approx(1.0));
  CHECK(ThrownCode([&] { DensityGrid(g, {0.0, -1.0, 0.0, 0.0}); }).has_value());
  CHECK(ThrownCode([&] { DensityGrid(g, {0.0, 1.0}); }) == ErrorCode::kShapeMismatch);
  DensityGrid empty(g);
  CHECK(ThrownCode([&] { empty.normalise(); }).has_value());

  const DensityGrid c = coarsen(DensityGrid(g, {1.0, 0.0, 0.5, 0.5}), 2);
  CHECK(c.cells() == 2);
  CHECK(c.values() == std::vector<double>{0.5, 0.5});
  CHECK(ThrownCode([&] { coarsen(c, 3); }).has_value());
  CHECK(l1_distance(c, DensityGrid(c.spec(), {0.0, 1.0})) == doctest::Approx(1.0));
}

TEST_CASE("gaussian cell averages") {
  const GridSpec g{-6.0, 6.0, 120};
  const DensityGrid d = gaussian_density(g, 0.7, 1.3);
  CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-14));
  const double z = Phi((6.0 - 0.7) / 1.3) - Phi((-6.0 - 0.7) / 1.3);
  for (std::size_t k = 0; k < g.cells; k += 7) {
    const double exact =
        (Phi((g.face(k + 1) - 0.7) / 1.3) - Phi((g.face(k) - 0.7) / 1.3)) / g.h() / z;
    CHECK(d.values()[k] == doctest::Approx(exact).epsilon(1e-12));
  }
  CHECK(d.mean() == doctest::Approx(0.7).epsilon(1e-3));
}

TEST_CASE("histogram density") {
  RngStream rng(1);
  std::vector<double> s(1000000);
  for (double& x : s) x = rng.normal();
  const GridSpec g{-6.0, 6.0, 200};
  const auto hist = histogram_density(s, g);
  CHECK(hist.inside + hist.outside == s.size());
  CHECK(hist.density.mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(l1_distance(hist.density, gaussian_density(g, 0.0, 1.0)) < 0.01);

  std::vector<double> same(1000, 0.31);
  same.push_back(100.0);
  const auto spike = histogram_density(same, g);
  CHECK(spike.outside == 1);
  std::size_t nonzero = 0;
  for (double v : spike.density.values()) nonzero += v > 0.0;
  CHECK(nonzero == 1);
  CHECK(spike.density.values()[105] * g.h() == doctest::Approx(1.0));
  CHECK(spike.density.values()[0] == 0.0);

  CHECK(ThrownCode([&] { histogram_density(std::span(s).first(999), g); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("moments of the forward chain") {
  auto rate = [](double) { return 0.02; };
  CHECK(moments_from_schedule(rate, 0.0, 3.0).m1 == 0.0);
  const Moments m = moments_from_schedule(rate, 1.0, 0.0);
  CHECK(m.m1 == doctest::Approx(0.01));
  CHECK(m.m2 == doctest::Approx(0.02));

  // One chain step from u = 1: E[u - u'] ~ m1 and Var[u'] = m2.
  const double beta = 0.02;
  RngStream rng(2);
  const std::size_t n = 400000;
  double sum = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = std::sqrt(1.0 - beta) + std::sqrt(beta) * rng.normal();
    sum += 1.0 - u;
    sq += u * u;
  }
  const double mean_drop = sum / n;
  const double var = sq / n - (1.0 - mean_drop) * (1.0 - mean_drop);
  CHECK(std::abs(mean_drop - m.m1) < 5.0 * std::sqrt(beta / n) + beta * beta);
  CHECK(std::abs(var - m.m2) < 5.0 * beta * std::sqrt(2.0 / n));

  // N(0, 1) is stationary: 1/2 (m2 phi)'' + (m1 phi)' = 0.
  const MomentFields mom = constant_rate_moments(beta);
  const double h = 1e-3;
  for (double u = -4.0; u <= 4.0; u += 0.25) {
    auto q2 = [&](double s) { return mom.m2(s, 0) * Density(s, 0, 1); };
    auto q1 = [&](double s) { return mom.m1(s, 0) * Density(s, 0, 1); };
    const double r = 0.5 * (q2(u + h) - 2 * q2(u) + q2(u - h)) / (h * h) +
                     (q1(u + h) - q1(u - h)) / (2 * h);
    CHECK(std::abs(r) < 1e-8);
  }
  CHECK(ThrownCode([] { constant_rate_moments(0.0); }).has_value());
}

TEST_CASE("pure diffusion follows the heat kernel") {
  const double c = 0.5, s2 = 0.25, t_end = 2.0;
  MomentFields mom;
  mom.m1 = [](double, double) { return 0.0; };
  mom.m2 = [c](double, double) { return c; };
  mom.time_independent = true;
  std::vector<double> errors;
  for (std::size_t cells : {60, 120, 240}) {
    const GridSpec g{-6.0, 6.0, cells};
    const DensityGrid p0 = gaussian_density(g, 0.0, std::sqrt(s2));
    const double dt = 0.5 * fp_max_stable_dt(g, mom, 0.0);
    const auto r = fp_forward_solve(p0, mom, t_end, dt);
    CHECK(r.mass_drift < 1e-13);
    CHECK(r.density.variance() == doctest::Approx(s2 + c * t_end).epsilon(1e-2));
    errors.push_back(l1_distance(
        r.density, gaussian_density(g, 0.0, std::sqrt(s2 + c * t_end))));
  }
  CHECK(errors[0] / errors[1] > 3.0);
  CHECK(errors[1] / errors[2] > 3.0);
  CHECK(errors[2] < 1e-4);
}

TEST_CASE("standard normal is stationary under the discrete solver") {
  const GridSpec g{-8.0, 8.0, 400};
  const auto mom = constant_rate_moments(0.02);
  const DensityGrid p0 = gaussian_density(g, 0.0, 1.0);
  const auto r = fp_forward_solve(p0, mom, 200.0, fp_max_stable_dt(g, mom, 0.0));
  CHECK(l1_distance(r.density, p0) < 1e-3);
  CHECK_FALSE(r.boundary_warning);
}

TEST_CASE("spike evolves into the transition kernel") {
  const double beta = 0.02, x = 1.0, t = 50.0;
  const GridSpec g{-6.0, 6.0, 800};
  const double s0 = 2.0 * g.h();
  const auto mom = constant_rate_moments(beta);
  const auto r = fp_forward_solve(gaussian_density(g, x, s0), mom, t,
                                  0.5 * fp_max_stable_dt(g, mom, 0.0));
  const double decay = std::exp(-beta * t);
  CHECK(r.density.mean() == doctest::Approx(x * std::sqrt(decay)).epsilon(1e-3));
  CHECK(r.density.variance() ==
        doctest::Approx(1.0 - decay + s0 * s0 * decay).epsilon(1e-3));
  for (double v : r.density.values()) CHECK(v >= 0.0);
  CHECK(r.mass_drift < 1e-12);
}

TEST_CASE("solver stability guard and boundary warning") {
  const GridSpec g{-2.0, 2.0, 40};
  const auto mom = constant_rate_moments(0.5);
  const double limit = fp_max_stable_dt(g, mom, 0.0);
  const DensityGrid p0 = gaussian_density(g, 0.0, 1.0);
  CHECK(ThrownCode([&] { fp_forward_solve(p0, mom, 1.0, 1.01 * limit); }) ==
        ErrorCode::kNumerical);
  const auto r = fp_forward_solve(p0, mom, 1.0, limit);
  CHECK(r.boundary_warning);
  CHECK(r.boundary_mass > kBoundaryMassWarning);

  // Strong drift on a coarse grid cannot be made stable by any dt.
  const GridSpec coarse{-50.0, 50.0, 10};
  CHECK(ThrownCode([&] { fp_max_stable_dt(coarse, constant_rate_moments(0.9), 0.0); }) ==
        ErrorCode::kNumerical);
}

TEST_CASE("kernel residuals are second order") {
  const double beta = 0.02;
  const auto kernel = gaussian_transition_kernel(beta);
  const auto mom = constant_rate_moments(beta);
  std::vector<KernelResiduals> res;
  for (std::size_t cells : {50, 100, 200}) {
    res.push_back(fp_backward_residual(kernel, mom, {-5.0, 5.0, cells}, 0.0, 5.0));
  }
  for (std::size_t k = 0; k + 1 < res.size(); ++k) {
    CHECK(std::log2(res[k].backward.l2 / res[k + 1].backward.l2) > 1.8);
    CHECK(std::log2(res[k].forward.l2 / res[k + 1].forward.l2) > 1.8);
  }
  // The mirrored Kolmogorov sign does not vanish under refinement.
  MomentFields flipped = mom;
  flipped.m2 = [](double, double) { return -0.02; };
  const auto wrong = fp_backward_residual(kernel, flipped, {-5.0, 5.0, 200}, 0.0, 5.0);
  CHECK(wrong.backward.l2 > 100.0 * res.back().backward.l2);
}

TEST_CASE("state-constant kernel") {
  auto kernel = [](double, double tau, double, double) { return std::exp(-tau); };
  const auto r = fp_backward_residual(kernel, constant_rate_moments(0.02),
                                      {-1.0, 1.0, 200}, 0.5, 2.0);
  // Backward side: spatial derivatives vanish, leaving d/dtau p.
  CHECK(r.backward.max == doctest::Approx(std::exp(-0.5)).epsilon(1e-4));
  // Forward side: d/dy (m1 p) = (beta / 2) p survives.
  CHECK(r.forward.max == doctest::Approx(0.01 * std::exp(-0.5)).epsilon(1e-12));
  CHECK(ThrownCode([&] {
          fp_backward_residual(kernel, constant_rate_moments(0.02), {-1, 1, 4}, 0.0, 0.5);
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("chain against PDE") {
  const auto s = probdiff::NoiseSchedule::constant(0.02, 250);
  const std::vector<std::size_t> steps = {0, 10, 50, 250};
  const auto pts = chain_vs_pde_compare(1.0, s, 100000, steps);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].l1 < 1.5);  // initial spike vs a two-cell Gaussian
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(pts[k].step == steps[k]);
    CHECK(pts[k].l1 < 0.05);
    CHECK(pts[k].sample_mean ==
          doctest::Approx(std::pow(0.98, 0.5 * steps[k])).epsilon(0.05));
  }

  const auto sym = chain_vs_pde_compare(0.0, s, 20000, std::vector<std::size_t>{50});
  CHECK(std::abs(sym[0].sample_skewness) < 3.0 * sym[0].skewness_stderr);

  const auto again = chain_vs_pde_compare(1.0, s, 100000, steps);
  CHECK(again[3].l1 == pts[3].l1);

  CHECK(ThrownCode([&] { chain_vs_pde_compare(1.0, s, 999, steps); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(ThrownCode([&] {
          chain_vs_pde_compare(1.0, probdiff::NoiseSchedule({0.1, 0.2}), 20000,
                               std::vector<std::size_t>{1});
        }) == ErrorCode::kInvalidArgument);
  CHECK(ThrownCode([&] {
          chain_vs_pde_compare(1.0, s, 20000, std::vector<std::size_t>{251});
        }) == ErrorCode::kOutOfRange);
}

}  // namespace
}  // namespace difflab::fp
