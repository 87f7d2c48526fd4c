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

#include "probdiff/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "core/error.hpp"

namespace difflab::probdiff {

SteadyStateReport steady_state_diagnostics(
    std::span<const ImageBuffer> samples,
    std::size_t max_correlation_dimension) {
  Require(!samples.empty(), ErrorCode::kInvalidArgument, "no samples");
  SteadyStateReport report;
  report.samples = samples.size();
  report.dimension = samples.front().size();
  const std::size_t d = report.dimension;
  const double count = static_cast<double>(samples.size());

  report.mean.assign(d, 0.0);
  for (const ImageBuffer& s : samples) {
    Require(s.size() == d, ErrorCode::kShapeMismatch,
            "samples differ in size");
    const auto data = s.data();
    for (std::size_t k = 0; k < d; ++k) report.mean[k] += data[k];
  }
  for (double& m : report.mean) m /= count;
  for (double m : report.mean) {
    report.max_abs_mean = std::max(report.max_abs_mean, std::fabs(m));
  }

  report.variance_defined = samples.size() >= 2;
  if (!report.variance_defined) return report;

  report.variance.assign(d, 0.0);
  for (const ImageBuffer& s : samples) {
    const auto data = s.data();
    for (std::size_t k = 0; k < d; ++k) {
      const double c = data[k] - report.mean[k];
      report.variance[k] += c * c;
    }
  }
  for (double& v : report.variance) {
    v /= count - 1.0;
    report.max_abs_variance_deviation =
        std::max(report.max_abs_variance_deviation, std::fabs(v - 1.0));
  }

  const std::size_t dc = std::min(d, max_correlation_dimension);
  report.correlation_dimension = dc;
  if (dc < 2) return report;
  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(dc);
  Eigen::MatrixXd centered(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto data = samples[static_cast<std::size_t>(r)].data();
    for (Eigen::Index c = 0; c < cols; ++c) {
      centered(r, c) = data[static_cast<std::size_t>(c)] -
                       report.mean[static_cast<std::size_t>(c)];
    }
  }
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(cols, cols);
  cov.selfadjointView<Eigen::Lower>().rankUpdate(centered.transpose());
  double sum = 0.0;
  for (Eigen::Index a = 0; a < cols; ++a) {
    for (Eigen::Index b = 0; b < a; ++b) {
      const double denom = std::sqrt(cov(a, a) * cov(b, b));
      sum += denom > 0.0 ? std::fabs(cov(a, b)) / denom : 0.0;
    }
  }
  const double pairs = 0.5 * static_cast<double>(dc) * static_cast<double>(dc - 1);
  report.mean_abs_correlation = sum / pairs;
  return report;
}

double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b) {
  Require(!a.empty() && !b.empty(), ErrorCode::kInvalidArgument,
          "KS statistic needs two non-empty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double sup = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    sup = std::max(sup, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
  }
  return sup;
}

double ks_critical_value(std::size_t n, std::size_t m, double alpha) {
  Require(alpha > 0.0 && alpha < 1.0, ErrorCode::kInvalidArgument,
          "significance level must lie in (0, 1)");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) * std::sqrt((dn + dm) / (dn * dm));
}

}  // namespace difflab::probdiff
