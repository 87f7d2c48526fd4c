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

#include "probdiff/schedule.hpp"

#include <string>
#include <utility>

#include "core/error.hpp"

namespace difflab::probdiff {

NoiseSchedule::NoiseSchedule(std::vector<double> betas)
    : betas_(std::move(betas)) {
  alpha_bar_.reserve(betas_.size() + 1);
  complement_.reserve(betas_.size() + 1);
  for (std::size_t j = 0; j < betas_.size(); ++j) {
    const double b = betas_[j];
    Require(b > 0.0 && b < 1.0, ErrorCode::kOutOfRange,
            "beta_" + std::to_string(j + 1) + " = " + std::to_string(b) +
                " is outside (0, 1)");
    const double prev = alpha_bar_.back();
    complement_.push_back(complement_.back() + prev * b);
    alpha_bar_.push_back(prev * (1.0 - b));
  }
}

NoiseSchedule NoiseSchedule::constant(double beta, std::size_t steps) {
  return NoiseSchedule(std::vector<double>(steps, beta));
}

double NoiseSchedule::beta(std::size_t step) const {
  Require(step >= 1 && step <= betas_.size(), ErrorCode::kOutOfRange,
          "schedule step " + std::to_string(step) + " outside 1.." +
              std::to_string(betas_.size()));
  return betas_[step - 1];
}

double NoiseSchedule::alpha_bar(std::size_t i) const {
  Require(i <= betas_.size(), ErrorCode::kOutOfRange,
          "step " + std::to_string(i) + " beyond schedule length " +
              std::to_string(betas_.size()));
  return alpha_bar_[i];
}

double NoiseSchedule::complement(std::size_t i) const {
  Require(i <= betas_.size(), ErrorCode::kOutOfRange,
          "step " + std::to_string(i) + " beyond schedule length " +
              std::to_string(betas_.size()));
  return complement_[i];
}

NoiseSchedule NoiseSchedule::slice(std::size_t first, std::size_t count) const {
  Require(first + count <= betas_.size(), ErrorCode::kOutOfRange,
          "schedule slice out of range");
  return NoiseSchedule(std::vector<double>(
      betas_.begin() + static_cast<std::ptrdiff_t>(first),
      betas_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

}  // namespace difflab::probdiff
