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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "doctest.h"
#include "test_util.hpp"

#include "core/rng.hpp"
#include "probdiff/diagnostics.hpp"
#include "probdiff/entropy.hpp"
#include "probdiff/forward_process.hpp"
#include "probdiff/gaussian.hpp"
#include "probdiff/knn_entropy.hpp"
#include "probdiff/schedule.hpp"

namespace difflab::probdiff {
namespace {

using testing::ThrownCode;

const double kHalfLog2PiE = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e);

// -int p ln p of N(0, s^2) by composite Simpson on [-14 s, 14 s].
double NumericGaussianEntropy(double s) {
  const int m = 20000;
  const double a = -14.0 * s, h = 28.0 * s / m;
  auto f = [&](double x) {
    const double p = std::exp(-0.5 * x * x / (s * s)) /
                     (s * std::sqrt(2.0 * std::numbers::pi));
    return p > 0.0 ? -p * std::log(p) : 0.0;
  };
  double sum = f(a) + f(a + m * h);
  for (int k = 1; k < m; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return sum * h / 3.0;
}

double MaxAbs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

TEST_CASE("schedule products") {
  const NoiseSchedule s({0.1, 0.2, 0.3});
  CHECK(s.alpha_bar(0) == 1.0);
  CHECK(s.alpha_bar(1) == 0.9);
  CHECK(s.alpha_bar(3) == doctest::Approx(0.9 * 0.8 * 0.7).epsilon(1e-15));
  CHECK(s.complement(1) == 0.1);
  for (std::size_t i = 0; i <= 3; ++i) {
    CHECK(s.complement(i) + s.alpha_bar(i) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(s.beta(2) == 0.2);
  CHECK(s.slice(1, 2).betas() == std::vector<double>{0.2, 0.3});
  CHECK(ThrownCode([&] { s.beta(0); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([&] { s.alpha_bar(4); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([&] { s.slice(2, 2); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([] { NoiseSchedule({0.5, 1.0}); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([] { NoiseSchedule({0.0}); }) == ErrorCode::kOutOfRange);
  CHECK(NoiseSchedule::constant(0.02, 0).empty());
}

TEST_CASE("forward step closed forms") {
  RngStream rng(1);
  const Shape shape{4, 3, 2};
  const ImageBuffer u = sample_standard_normal(rng, shape);
  const ImageBuffer g = sample_standard_normal(rng, shape);
  const ImageBuffer zero(shape, 0.0);

  const ImageBuffer a = forward_step(zero, 0.02, g);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == doctest::Approx(std::sqrt(0.02) * g[k]).epsilon(1e-15));
  }
  const ImageBuffer b = forward_step(u, 0.19, zero);
  for (std::size_t k = 0; k < b.size(); ++k) {
    CHECK(b[k] == doctest::Approx(0.9 * u[k]).epsilon(1e-15));
  }
  CHECK(ThrownCode([&] { forward_step(u, 1.0, g); }) == ErrorCode::kOutOfRange);
  CHECK(ThrownCode([&] { forward_step(u, 0.1, ImageBuffer({4, 3, 1})); }) ==
        ErrorCode::kShapeMismatch);
}

TEST_CASE("jump to step") {
  RngStream rng(2);
  const Shape shape{3, 3, 1};
  const ImageBuffer u = sample_standard_normal(rng, shape);
  const ImageBuffer g = sample_standard_normal(rng, shape);
  const auto s = NoiseSchedule::constant(0.02, 5);

  CHECK(jump_to_step(u, s, 0, g) == u);
  CHECK(jump_to_step(u, s, 1, g) == forward_step(u, 0.02, g));
  const ImageBuffer two = jump_to_step(u, s, 2, ImageBuffer(shape, 0.0));
  for (std::size_t k = 0; k < u.size(); ++k) {
    CHECK(two[k] == doctest::Approx(0.98 * u[k]).epsilon(1e-14));
  }
  CHECK(ThrownCode([&] { jump_to_step(u, s, 6, g); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("jump samples match composed steps") {
  const NoiseSchedule s({0.3, 0.45});
  const std::size_t n = 100000;
  RngStream rng(3);
  const ImageBuffer u0({1, 1, 1}, 1.5);
  double m_jump = 0, v_jump = 0, m_two = 0, v_two = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double j = jump_to_step(u0, s, 2, sample_standard_normal(rng, {1, 1, 1}))[0];
    ImageBuffer t = forward_step(u0, 0.3, sample_standard_normal(rng, {1, 1, 1}));
    t = forward_step(t, 0.45, sample_standard_normal(rng, {1, 1, 1}));
    m_jump += j;
    v_jump += j * j;
    m_two += t[0];
    v_two += t[0] * t[0];
  }
  m_jump /= n;
  m_two /= n;
  v_jump = v_jump / n - m_jump * m_jump;
  v_two = v_two / n - m_two * m_two;
  const double var = 1.0 - 0.7 * 0.55;
  const double se_mean = std::sqrt(2.0 * var / n);
  const double se_var = var * std::sqrt(2.0 * 2.0 / n);
  CHECK(std::abs(m_jump - m_two) < 5.0 * se_mean);
  CHECK(std::abs(v_jump - v_two) < 5.0 * se_var);
  CHECK(std::abs(m_jump - 1.5 * std::sqrt(0.7 * 0.55)) < 5.0 * se_mean);
}

TEST_CASE("gaussian marginal closed forms") {
  const auto s = NoiseSchedule::constant(0.3, 40);
  const GaussianStats std_normal = GaussianStats::standard_normal(3);
  for (std::size_t i : {0, 1, 7, 40}) {
    const auto m = gaussian_marginal(std_normal, s, i);
    CHECK(m.mean().norm() == 0.0);
    CHECK(MaxAbs(m.covariance_matrix() - Eigen::MatrixXd::Identity(3, 3)) < 1e-15);
  }

  Eigen::VectorXd mu(2);
  mu << 1.0, -3.0;
  const GaussianStats s0(mu, ScalarCovariance{4.0});
  const auto one = gaussian_marginal(s0, NoiseSchedule({0.5}), 1);
  CHECK((one.mean() - mu / std::sqrt(2.0)).norm() < 1e-15);
  CHECK(std::get<ScalarCovariance>(one.covariance()).variance ==
        doctest::Approx(2.5).epsilon(1e-15));

  const auto far = gaussian_marginal(s0, s, 40);
  CHECK((far.mean() - std::pow(0.7, 20) * mu).norm() < 1e-15);
  CHECK(MaxAbs(far.covariance_matrix() - Eigen::MatrixXd::Identity(2, 2)) < 1e-5);

  CHECK(ThrownCode([&] { gaussian_marginal(s0, s, 41); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("gaussian marginal full covariance against Monte-Carlo") {
  Eigen::MatrixXd c(2, 2);
  c << 2.0, 0.8, 0.8, 1.0;
  Eigen::VectorXd mu(2);
  mu << 0.5, -1.0;
  const NoiseSchedule s({0.2, 0.35});
  const auto m = gaussian_marginal(GaussianStats(mu, FullCovariance{c}), s, 2);

  const Eigen::MatrixXd chol = c.llt().matrixL();
  RngStream rng(4);
  const std::size_t n = 100000;
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::Vector2d z(rng.normal(), rng.normal());
    Eigen::Vector2d u = mu + chol * z;
    for (std::size_t i = 1; i <= 2; ++i) {
      const double b = s.beta(i);
      u = std::sqrt(1.0 - b) * u +
          std::sqrt(b) * Eigen::Vector2d(rng.normal(), rng.normal());
    }
    sum += u;
    sq += u * u.transpose();
  }
  const Eigen::Vector2d mean = sum / n;
  const Eigen::Matrix2d cov = sq / n - mean * mean.transpose();
  CHECK((mean - m.mean()).cwiseAbs().maxCoeff() < 0.02);
  CHECK(MaxAbs(cov - m.covariance_matrix()) < 0.03);
}

TEST_CASE("gaussian marginal semigroup") {
  RngStream rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t len = 1 + rng.below(20);
    std::vector<double> betas(len);
    for (double& b : betas) b = 0.01 + 0.98 * rng.uniform();
    const NoiseSchedule s(betas);
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(3, 3);
    const GaussianStats s0(Eigen::Vector3d::Random(),
                           FullCovariance{a * a.transpose()});
    const std::size_t k = rng.below(len + 1);
    const auto split =
        gaussian_marginal(gaussian_marginal(s0, s.slice(0, k), k),
                          s.slice(k, len - k), len - k);
    const auto direct = gaussian_marginal(s0, s, len);
    CHECK((split.mean() - direct.mean()).norm() <= 1e-12 * (1.0 + direct.mean().norm()));
    CHECK(MaxAbs(split.covariance_matrix() - direct.covariance_matrix()) <= 1e-12);
  }
}

TEST_CASE("gaussian stats validation") {
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.5, 0.0, 1.0;
  Eigen::MatrixXd indef(2, 2);
  indef << 1.0, 2.0, 2.0, 1.0;
  CHECK(ThrownCode([&] { GaussianStats(Eigen::Vector2d::Zero(), FullCovariance{asym}); })
            .has_value());
  CHECK(ThrownCode([&] { GaussianStats(Eigen::Vector2d::Zero(), FullCovariance{indef}); })
            .has_value());
  CHECK(ThrownCode([] { GaussianStats(Eigen::Vector2d::Zero(), ScalarCovariance{-1.0}); })
            .has_value());
  CHECK(ThrownCode([] {
          GaussianStats(Eigen::Vector2d::Zero(), DiagonalCovariance{Eigen::Vector3d::Ones()});
        }) == ErrorCode::kShapeMismatch);
}

TEST_CASE("differential entropy of gaussians") {
  const double h1 = differential_entropy_gaussian(GaussianStats::standard_normal(1));
  CHECK(h1 == doctest::Approx(1.4189385332).epsilon(1e-10));
  CHECK(std::abs(h1 - NumericGaussianEntropy(1.0)) < 1e-9);
  CHECK(std::abs(differential_entropy_gaussian(
                     GaussianStats(Eigen::VectorXd::Zero(1), ScalarCovariance{6.25})) -
                 NumericGaussianEntropy(2.5)) < 1e-9);

  const std::size_t n = 4;
  const double c = 3.7;
  const double base = differential_entropy_gaussian(GaussianStats::standard_normal(n));
  const double scaled = differential_entropy_gaussian(
      GaussianStats(Eigen::VectorXd::Zero(n), ScalarCovariance{c}));
  CHECK(scaled - base == doctest::Approx(0.5 * n * std::log(c)).epsilon(1e-13));

  Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
  const Eigen::MatrixXd cov = a * a.transpose() + Eigen::MatrixXd::Identity(n, n);
  const double h_full = differential_entropy_gaussian(
      GaussianStats(Eigen::VectorXd::Zero(n), FullCovariance{cov}));
  const double h_shift = differential_entropy_gaussian(
      GaussianStats(Eigen::VectorXd::Constant(n, 9.0), FullCovariance{cov}));
  CHECK(h_full == h_shift);
  CHECK(h_full == doctest::Approx(n * kHalfLog2PiE + 0.5 * std::log(cov.determinant()))
                      .epsilon(1e-12));

  Eigen::VectorXd d(3);
  d << 0.5, 2.0, 3.0;
  const double h_diag = differential_entropy_gaussian(
      GaussianStats(Eigen::VectorXd::Zero(3), DiagonalCovariance{d}));
  const double h_as_full = differential_entropy_gaussian(
      GaussianStats(Eigen::VectorXd::Zero(3), FullCovariance{Eigen::MatrixXd(d.asDiagonal())}));
  CHECK(h_diag == doctest::Approx(h_as_full).epsilon(1e-14));

  CHECK(ThrownCode([] {
          differential_entropy_gaussian(
              GaussianStats(Eigen::VectorXd::Zero(2), ScalarCovariance{0.0}));
        }) == ErrorCode::kNumerical);
}

TEST_CASE("admissible interval") {
  const auto b1 = admissible_interval(1);
  const double eps = 1.0 / (2.0 * std::numbers::pi * std::numbers::e);
  CHECK(b1.lower == doctest::Approx(0.06245).epsilon(1e-4));
  CHECK(b1.upper == doctest::Approx(0.93755).epsilon(1e-5));
  CHECK(std::abs(b1.lower * b1.lower - b1.lower + eps) < 1e-16);
  CHECK(std::abs(b1.upper * b1.upper - b1.upper + eps) < 1e-16);
  CHECK(entropy_increment(b1.lower, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(entropy_increment(b1.lower, 1)) < 1e-12);
  CHECK(std::abs(entropy_increment(b1.upper, 1)) < 1e-12);

  double prev_lower = b1.lower;
  for (std::uint64_t n = 2; n <= 400; n *= 2) {
    const auto b = admissible_interval(n);
    CHECK(b.lower < prev_lower);
    CHECK(b.lower > 0.0);
    CHECK(b.upper <= 1.0);  // 1 - eps rounds to 1 once eps < 2^-53
    prev_lower = b.lower;
    CHECK(validate_schedule(NoiseSchedule({0.5}), n)[0].admissible);
  }
  CHECK(admissible_interval(400).lower < 1e-300);
  CHECK(ThrownCode([] { admissible_interval(0); }).has_value());

  const auto report = validate_schedule(NoiseSchedule({0.01, 0.5, 0.95}), 1);
  REQUIRE(report.size() == 3);
  CHECK_FALSE(report[0].admissible);
  CHECK(report[0].margin == doctest::Approx(0.01 - b1.lower));
  CHECK(report[1].admissible);
  CHECK(report[1].margin == doctest::Approx(b1.upper - 0.5));
  CHECK_FALSE(report[2].admissible);
  CHECK(report[2].step == 3);
}

TEST_CASE("entropy increment") {
  CHECK(entropy_increment(0.5, 1) == doctest::Approx(0.7257913526).epsilon(1e-9));
  CHECK(entropy_increment(0.01, 1) < 0.0);
  for (double b : {0.1, 0.3, 0.7, 0.9}) {
    CHECK(entropy_increment(b, 1) < entropy_increment(0.5, 1));
    CHECK(entropy_increment(b, 1) ==
          doctest::Approx(entropy_increment(1.0 - b, 1)).epsilon(1e-14));
  }
  // Gaussian oracle, n = 1: the pair (sqrt(1 - beta) U, sqrt(beta) G) with
  // U, G ~ N(0, 1) independent has entropy H(U) + increment.
  for (double b : {0.07, 0.2, 0.5, 0.8, 0.93}) {
    Eigen::VectorXd d(2);
    d << 1.0 - b, b;
    const double joint = differential_entropy_gaussian(
        GaussianStats(Eigen::VectorXd::Zero(2), DiagonalCovariance{d}));
    const double h_u = differential_entropy_gaussian(GaussianStats::standard_normal(1));
    CHECK(std::abs(joint - h_u - entropy_increment(b, 1)) < 1e-12);
  }
}

TEST_CASE("conditional entropy") {
  const auto s = NoiseSchedule::constant(0.02, 3000);
  CHECK_FALSE(conditional_entropy(s, 0, 1).has_value());
  CHECK(*conditional_entropy(s, 1, 1) == doctest::Approx(-0.5367).epsilon(1e-3));
  CHECK(*conditional_entropy(s, 1, 1) ==
        doctest::Approx(kHalfLog2PiE + 0.5 * std::log(0.02)).epsilon(1e-15));
  CHECK(*conditional_entropy(s, 2, 1) > *conditional_entropy(s, 1, 1));
  CHECK(*conditional_entropy(s, 2, 1) ==
        doctest::Approx(kHalfLog2PiE + 0.5 * std::log(0.0396)).epsilon(1e-14));
  CHECK(*conditional_entropy(s, 3000, 5) == doctest::Approx(5 * kHalfLog2PiE).epsilon(1e-15));
  CHECK(ThrownCode([&] { conditional_entropy(s, 3001, 1); }) == ErrorCode::kOutOfRange);

  for (std::size_t i = 1; i < 3000; ++i) {
    const double inc = conditional_entropy_increment(s, i, 7);
    CHECK(inc > 0.0);
    CHECK(conditional_entropy_gap(s, i + 1, 7) > conditional_entropy_gap(s, i, 7));
    if (i < 200) {
      CHECK(inc == doctest::Approx(*conditional_entropy(s, i + 1, 7) -
                                   *conditional_entropy(s, i, 7))
                       .epsilon(1e-9));
      CHECK(conditional_entropy_gap(s, i, 7) ==
            doctest::Approx(*conditional_entropy(s, i, 7) - 7 * kHalfLog2PiE)
                .epsilon(1e-10));
    }
  }
  CHECK(ThrownCode([&] { conditional_entropy_increment(s, 3000, 1); }) ==
        ErrorCode::kOutOfRange);
  CHECK(ThrownCode([&] { conditional_entropy_gap(s, 0, 1); }) ==
        ErrorCode::kOutOfRange);
}

TEST_CASE("kNN entropy estimator") {
  RngStream rng(6);
  const std::size_t n = 100000;
  std::vector<double> gauss(n), unif(n), gauss2(2 * n);
  for (double& x : gauss) x = rng.normal();
  for (double& x : unif) x = rng.uniform();
  for (double& x : gauss2) x = rng.normal();

  const double h_gauss = knn_entropy_estimate(gauss, 1);
  CHECK(std::abs(h_gauss - 1.4189385) < 0.05);
  CHECK(std::abs(knn_entropy_estimate(unif, 1)) < 0.05);
  std::vector<double> doubled = gauss;
  for (double& x : doubled) x *= 2.0;
  CHECK(std::abs(knn_entropy_estimate(doubled, 1) - h_gauss - std::log(2.0)) < 0.05);
  CHECK(std::abs(knn_entropy_estimate(gauss2, 2) - 2.0 * 1.4189385) < 0.05);

  // Nested-vector overload sees the same data.
  std::vector<std::vector<double>> rows(1000);
  std::vector<double> flat(2000);
  for (std::size_t i = 0; i < 1000; ++i) {
    rows[i] = {gauss2[2 * i], gauss2[2 * i + 1]};
    flat[2 * i] = gauss2[2 * i];
    flat[2 * i + 1] = gauss2[2 * i + 1];
  }
  CHECK(knn_entropy_estimate(rows) == knn_entropy_estimate(flat, 2));

  // Exact brute-force estimator on a small sample.
  std::vector<double> small(200);
  for (double& x : small) x = rng.normal();
  KnnEntropyOptions opt;
  opt.k = 4;
  double log_sum = 0.0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    std::vector<double> d;
    for (std::size_t j = 0; j < small.size(); ++j) {
      if (j != i) d.push_back(std::abs(small[i] - small[j]));
    }
    std::nth_element(d.begin(), d.begin() + 3, d.end());
    log_sum += std::log(d[3]);
  }
  // psi(N) - psi(k) + ln V_1 + mean ln eps, with V_1 = 2.
  double psi_n = -0.5772156649015329, psi_k = -0.5772156649015329;
  for (std::size_t m = 1; m < small.size(); ++m) psi_n += 1.0 / m;
  for (std::size_t m = 1; m < 4; ++m) psi_k += 1.0 / m;
  const double brute = psi_n - psi_k + std::log(2.0) + log_sum / small.size();
  CHECK(knn_entropy_estimate(small, 1, opt) == doctest::Approx(brute).epsilon(1e-12));

  // Duplicates are jittered instead of producing -inf.
  std::vector<double> dup(100, 0.25);
  for (std::size_t i = 0; i < 50; ++i) dup[i] = rng.uniform();
  CHECK(std::isfinite(knn_entropy_estimate(dup, 1)));

  CHECK(ThrownCode([&] { knn_entropy_estimate(std::vector<double>(50, 0.0), 5); })
            .has_value());
  CHECK(ThrownCode([&] { knn_entropy_estimate(std::vector<double>(3, 0.0), 1); })
            .has_value());
}

TEST_CASE("trajectories") {
  RngStream rng(7);
  const ImageBuffer u0 = sample_standard_normal(rng, {4, 4, 1});
  const auto s = NoiseSchedule::constant(0.02, 64);

  RngStream r0(1);
  const std::vector<std::size_t> only0 = {0};
  const auto t0 = run_trajectory(u0, s, only0, r0);
  REQUIRE(t0.frames.size() == 1);
  CHECK(t0.frames[0].image == u0);
  CHECK(r0.position() == 0);

  const std::vector<std::size_t> rec = {0, 1, 2, 8, 64};
  RngStream ra(9), rb(9);
  const auto a = run_trajectory(u0, s, rec, ra);
  const auto b = run_trajectory(u0, s, rec, rb);
  REQUIRE(a.frames.size() == rec.size());
  for (std::size_t k = 0; k < rec.size(); ++k) {
    CHECK(a.frames[k].step == rec[k]);
    CHECK(a.frames[k].image == b.frames[k].image);
  }
  CHECK(a.seed == 9);

  // Manual iteration with the same noise.
  RngStream rm(9);
  ImageBuffer u = u0;
  for (std::size_t i = 1; i <= 64; ++i) {
    u = forward_step(u, 0.02, sample_standard_normal(rm, u0.shape()));
    if (i == 8) CHECK(u == a.frames[3].image);
  }
  CHECK(u == a.frames[4].image);

  const std::vector<std::size_t> bad_order = {2, 1};
  const std::vector<std::size_t> too_far = {65};
  CHECK(ThrownCode([&] { run_trajectory(u0, s, bad_order, ra); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(ThrownCode([&] { run_trajectory(u0, s, too_far, ra); }) ==
        ErrorCode::kOutOfRange);
}

TEST_CASE("steady state diagnostics") {
  RngStream rng(8);
  std::vector<ImageBuffer> samples;
  const std::size_t n = 4000;
  for (std::size_t k = 0; k < n; ++k) samples.push_back(sample_standard_normal(rng, {4, 4, 1}));
  const auto r = steady_state_diagnostics(samples);
  CHECK(r.samples == n);
  CHECK(r.dimension == 16);
  CHECK(r.variance_defined);
  CHECK(r.max_abs_mean < 5.0 / std::sqrt(double(n)));
  CHECK(r.max_abs_variance_deviation < 5.0 * std::sqrt(2.0 / n));
  CHECK(r.mean_abs_correlation < 0.05);

  // Oracle on a tiny set.
  std::vector<ImageBuffer> tiny = {ImageBuffer({2, 1, 1}, {1.0, 2.0}),
                                   ImageBuffer({2, 1, 1}, {3.0, 0.0}),
                                   ImageBuffer({2, 1, 1}, {5.0, 1.0})};
  const auto t = steady_state_diagnostics(tiny);
  CHECK(t.mean[0] == doctest::Approx(3.0));
  CHECK(t.mean[1] == doctest::Approx(1.0));
  CHECK(t.variance[0] == doctest::Approx(4.0));
  CHECK(t.variance[1] == doctest::Approx(1.0));
  CHECK(t.mean_abs_correlation == doctest::Approx(0.5));

  const auto one = steady_state_diagnostics(std::span(samples).first(1));
  CHECK_FALSE(one.variance_defined);
  CHECK(one.variance.empty());
}

TEST_CASE("two-sample KS statistic") {
  RngStream rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(30 + rng.below(20)), b(20 + rng.below(30));
    for (double& x : a) x = std::round(4.0 * rng.normal()) / 4.0;  // ties
    for (double& x : b) x = std::round(4.0 * rng.normal() + 1.0) / 4.0;
    double brute = 0.0;
    for (double t : a) {
      for (double x : {t}) {
        double fa = 0, fb = 0;
        for (double y : a) fa += y <= x;
        for (double y : b) fb += y <= x;
        brute = std::max(brute, std::abs(fa / a.size() - fb / b.size()));
      }
    }
    for (double x : b) {
      double fa = 0, fb = 0;
      for (double y : a) fa += y <= x;
      for (double y : b) fb += y <= x;
      brute = std::max(brute, std::abs(fa / a.size() - fb / b.size()));
    }
    CHECK(ks_two_sample_statistic(a, b) == doctest::Approx(brute).epsilon(1e-15));
  }
  CHECK(ks_critical_value(100, 100, 0.05) ==
        doctest::Approx(1.3581015 * std::sqrt(0.02)).epsilon(1e-6));
}

}  // namespace
}  // namespace difflab::probdiff
