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

#ifndef DIFFLAB_PROBDIFF_GAUSSIAN_HPP_
#define DIFFLAB_PROBDIFF_GAUSSIAN_HPP_

#include <cstddef>
#include <variant>

#include <Eigen/Dense>

#include "probdiff/schedule.hpp"

namespace difflab::probdiff {

struct ScalarCovariance {
  double variance;  // covariance = variance * I
};
struct DiagonalCovariance {
  Eigen::VectorXd variances;
};
struct FullCovariance {
  Eigen::MatrixXd matrix;
};
using Covariance =
    std::variant<ScalarCovariance, DiagonalCovariance, FullCovariance>;

// Mean and covariance of a multivariate Gaussian. The covariance keeps its
// structure (scalar, diagonal, full) through the affine forward maps.
class GaussianStats {
 public:
  // Throws unless the covariance is symmetric positive semi-definite and its
  // dimension matches the mean.
  GaussianStats(Eigen::VectorXd mean, Covariance covariance);

  static GaussianStats standard_normal(std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(mean_.size()); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Covariance& covariance() const { return covariance_; }
  Eigen::MatrixXd covariance_matrix() const;

 private:
  Eigen::VectorXd mean_;
  Covariance covariance_;
};

// Law of u_i = sqrt(a) u_0 + sqrt(1 - a) g with a = alpha_bar(i):
// mean sqrt(a) m0, covariance a C0 + (1 - a) I.
GaussianStats gaussian_marginal(const GaussianStats& stats0,
                                const NoiseSchedule& schedule, std::size_t i);

// (n/2) ln(2 pi e) + (1/2) ln det C, in nats. Throws on a singular covariance.
double differential_entropy_gaussian(const GaussianStats& stats);

}  // namespace difflab::probdiff

#endif  // DIFFLAB_PROBDIFF_GAUSSIAN_HPP_
