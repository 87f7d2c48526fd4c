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

#include "probdiff/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace difflab::probdiff {

namespace {

const double kLog2PiE = std::log(2.0 * std::numbers::pi * std::numbers::e);

void CheckBeta(double beta) {
  Require(beta > 0.0 && beta < 1.0, ErrorCode::kOutOfRange,
          "beta must lie in (0, 1)");
}

}  // namespace

double standard_normal_entropy(std::uint64_t n) {
  return 0.5 * static_cast<double>(n) * kLog2PiE;
}

AdmissibleInterval admissible_interval(std::uint64_t n) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "pixel count must be >= 1");
  const double eps = std::exp(-static_cast<double>(n) * kLog2PiE);
  const double upper = 0.5 + std::sqrt(0.25 - eps);
  return {eps / upper, upper};
}

std::vector<StepAdmissibility> validate_schedule(const NoiseSchedule& schedule,
                                                 std::uint64_t n) {
  const AdmissibleInterval bounds = admissible_interval(n);
  std::vector<StepAdmissibility> report;
  report.reserve(schedule.size());
  for (std::size_t i = 1; i <= schedule.size(); ++i) {
    const double b = schedule.beta(i);
    const double margin = std::min(b - bounds.lower, bounds.upper - b);
    report.push_back({i, b, margin >= 0.0, margin});
  }
  return report;
}

double entropy_increment(double beta, std::uint64_t n) {
  CheckBeta(beta);
  return standard_normal_entropy(n) + 0.5 * std::log((1.0 - beta) * beta);
}

std::optional<double> conditional_entropy(const NoiseSchedule& schedule,
                                          std::size_t i, std::uint64_t n) {
  const double c = schedule.complement(i);
  if (i == 0) return std::nullopt;
  return 0.5 * static_cast<double>(n) * (kLog2PiE + std::log(c));
}

double conditional_entropy_increment(const NoiseSchedule& schedule,
                                     std::size_t i, std::uint64_t n) {
  Require(i >= 1 && i < schedule.size(), ErrorCode::kOutOfRange,
          "conditional entropy increment needs 1 <= i < schedule length");
  const double ratio =
      schedule.alpha_bar(i) * schedule.beta(i + 1) / schedule.complement(i);
  return 0.5 * static_cast<double>(n) * std::log1p(ratio);
}

double conditional_entropy_gap(const NoiseSchedule& schedule, std::size_t i,
                               std::uint64_t n) {
  Require(i >= 1, ErrorCode::kOutOfRange, "conditional entropy gap needs i >= 1");
  return 0.5 * static_cast<double>(n) * std::log1p(-schedule.alpha_bar(i));
}

}  // namespace difflab::probdiff
