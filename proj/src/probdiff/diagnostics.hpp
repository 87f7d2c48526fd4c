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

#ifndef DIFFLAB_PROBDIFF_DIAGNOSTICS_HPP_
#define DIFFLAB_PROBDIFF_DIAGNOSTICS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "core/image_buffer.hpp"

namespace difflab::probdiff {

struct SteadyStateReport {
  std::size_t samples = 0;
  std::size_t dimension = 0;
  std::vector<double> mean;
  std::vector<double> variance;  // empty when undefined (one sample)
  bool variance_defined = false;
  // Mean |corr(x_a, x_b)| over pairs a < b of the first
  // `correlation_dimension` entries.
  double mean_abs_correlation = 0.0;
  std::size_t correlation_dimension = 0;
  // Deviations from the N(0, I) targets.
  double max_abs_mean = 0.0;
  double max_abs_variance_deviation = 0.0;
};

// Per-entry sample moments of a population of equally shaped images.
// Variances use the N - 1 denominator. Correlations are limited to the first
// `max_correlation_dimension` entries to bound the O(N d^2) cost.
SteadyStateReport steady_state_diagnostics(
    std::span<const ImageBuffer> samples,
    std::size_t max_correlation_dimension = 1024);

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b);

// Asymptotic critical value c(alpha) sqrt((n + m) / (n m)) with
// c(alpha) = sqrt(-ln(alpha / 2) / 2).
double ks_critical_value(std::size_t n, std::size_t m, double alpha);

}  // namespace difflab::probdiff

#endif  // DIFFLAB_PROBDIFF_DIAGNOSTICS_HPP_
