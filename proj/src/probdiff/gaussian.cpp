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

#include "probdiff/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "core/error.hpp"

namespace difflab::probdiff {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

GaussianStats::GaussianStats(Eigen::VectorXd mean, Covariance covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
  const Eigen::Index n = mean_.size();
  Require(n > 0, ErrorCode::kInvalidArgument, "Gaussian dimension must be > 0");
  Require(mean_.allFinite(), ErrorCode::kNumerical, "mean is not finite");
  std::visit(
      Overloaded{
          [](const ScalarCovariance& c) {
            Require(std::isfinite(c.variance) && c.variance >= 0.0,
                    ErrorCode::kInvalidArgument, "variance must be >= 0");
          },
          [n](const DiagonalCovariance& c) {
            Require(c.variances.size() == n, ErrorCode::kShapeMismatch,
                    "diagonal covariance length differs from mean");
            Require(c.variances.allFinite() && c.variances.minCoeff() >= 0.0,
                    ErrorCode::kInvalidArgument,
                    "diagonal variances must be >= 0");
          },
          [n](const FullCovariance& c) {
            Require(c.matrix.rows() == n && c.matrix.cols() == n,
                    ErrorCode::kShapeMismatch,
                    "covariance matrix shape differs from mean");
            Require(c.matrix.allFinite(), ErrorCode::kNumerical,
                    "covariance is not finite");
            const double scale = std::max(1.0, c.matrix.cwiseAbs().maxCoeff());
            Require((c.matrix - c.matrix.transpose()).cwiseAbs().maxCoeff() <=
                        1e-12 * scale,
                    ErrorCode::kInvalidArgument, "covariance is not symmetric");
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
                c.matrix, Eigen::EigenvaluesOnly);
            Require(eig.eigenvalues().minCoeff() >= -1e-12 * scale,
                    ErrorCode::kInvalidArgument,
                    "covariance is not positive semi-definite");
          },
      },
      covariance_);
}

GaussianStats GaussianStats::standard_normal(std::size_t n) {
  return GaussianStats(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)),
                       ScalarCovariance{1.0});
}

Eigen::MatrixXd GaussianStats::covariance_matrix() const {
  const Eigen::Index n = mean_.size();
  return std::visit(
      Overloaded{
          [n](const ScalarCovariance& c) -> Eigen::MatrixXd {
            return c.variance * Eigen::MatrixXd::Identity(n, n);
          },
          [](const DiagonalCovariance& c) -> Eigen::MatrixXd {
            return c.variances.asDiagonal();
          },
          [](const FullCovariance& c) -> Eigen::MatrixXd { return c.matrix; },
      },
      covariance_);
}

GaussianStats gaussian_marginal(const GaussianStats& stats0,
                                const NoiseSchedule& schedule, std::size_t i) {
  const double a = schedule.alpha_bar(i);
  const double c = schedule.complement(i);
  Eigen::VectorXd mean = std::sqrt(a) * stats0.mean();
  Covariance cov = std::visit(
      Overloaded{
          [&](const ScalarCovariance& s) -> Covariance {
            return ScalarCovariance{a * s.variance + c};
          },
          [&](const DiagonalCovariance& d) -> Covariance {
            return DiagonalCovariance{
                (a * d.variances.array() + c).matrix()};
          },
          [&](const FullCovariance& f) -> Covariance {
            Eigen::MatrixXd m = a * f.matrix;
            m.diagonal().array() += c;
            return FullCovariance{std::move(m)};
          },
      },
      stats0.covariance());
  return GaussianStats(std::move(mean), std::move(cov));
}

double differential_entropy_gaussian(const GaussianStats& stats) {
  const double n = static_cast<double>(stats.dim());
  const double log_det = std::visit(
      Overloaded{
          [n](const ScalarCovariance& s) {
            Require(s.variance > 0.0, ErrorCode::kNumerical,
                    "singular covariance");
            return n * std::log(s.variance);
          },
          [](const DiagonalCovariance& d) {
            Require(d.variances.minCoeff() > 0.0, ErrorCode::kNumerical,
                    "singular covariance");
            return d.variances.array().log().sum();
          },
          [](const FullCovariance& f) {
            const Eigen::LLT<Eigen::MatrixXd> llt(f.matrix);
            Require(llt.info() == Eigen::Success, ErrorCode::kNumerical,
                    "singular covariance");
            const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
            Require(diag.minCoeff() > 0.0, ErrorCode::kNumerical,
                    "singular covariance");
            return 2.0 * diag.array().log().sum();
          },
      },
      stats.covariance());
  return 0.5 * n * std::log(2.0 * std::numbers::pi * std::numbers::e) +
         0.5 * log_det;
}

}  // namespace difflab::probdiff
