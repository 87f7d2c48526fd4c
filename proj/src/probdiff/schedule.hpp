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

#ifndef DIFFLAB_PROBDIFF_SCHEDULE_HPP_
#define DIFFLAB_PROBDIFF_SCHEDULE_HPP_

#include <cstddef>
#include <vector>

namespace difflab::probdiff {

// Noise schedule beta_1..beta_m, every value strictly inside (0, 1).
//
// Steps are 1-indexed: beta(1) drives the transition u_0 -> u_1, and the
// cumulative quantities at step i are products over j = 1..i, with the empty
// product (i = 0) equal to 1.
class NoiseSchedule {
 public:
  NoiseSchedule() = default;
  explicit NoiseSchedule(std::vector<double> betas);

  static NoiseSchedule constant(double beta, std::size_t steps);

  std::size_t size() const { return betas_.size(); }
  bool empty() const { return betas_.empty(); }
  const std::vector<double>& betas() const { return betas_; }
  double beta(std::size_t step) const;

  // prod_{j<=i} (1 - beta_j).
  double alpha_bar(std::size_t i) const;
  // 1 - alpha_bar(i), accumulated without cancellation:
  //   c_i = c_{i-1} + alpha_bar(i-1) * beta_i,
  // so complement(1) == beta(1) exactly.
  double complement(std::size_t i) const;

  // Steps first+1 .. first+count as a new schedule.
  NoiseSchedule slice(std::size_t first, std::size_t count) const;

 private:
  std::vector<double> betas_;
  std::vector<double> alpha_bar_{1.0};
  std::vector<double> complement_{0.0};
};

}  // namespace difflab::probdiff

#endif  // DIFFLAB_PROBDIFF_SCHEDULE_HPP_
