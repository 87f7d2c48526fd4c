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

#ifndef DIFFLAB_PROBDIFF_ENTROPY_HPP_
#define DIFFLAB_PROBDIFF_ENTROPY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "probdiff/schedule.hpp"

// Entropy bookkeeping for the forward process. All entropies are in nats.
namespace difflab::probdiff {

// H(N(0, I_n)) = (n/2) ln(2 pi e).
double standard_normal_entropy(std::uint64_t n);

// Closed interval of betas with beta^2 - beta + (2 pi e)^-n <= 0. The lower
// root is formed as eps / upper so it stays accurate when eps underflows
// towards zero for large n.
struct AdmissibleInterval {
  double lower;
  double upper;
};
AdmissibleInterval admissible_interval(std::uint64_t n);

struct StepAdmissibility {
  std::size_t step;  // 1-based
  double beta;
  bool admissible;
  // Signed distance to the nearest interval bound; negative outside.
  double margin;
};

std::vector<StepAdmissibility> validate_schedule(const NoiseSchedule& schedule,
                                                 std::uint64_t n);

// H(G) + ln sqrt((1 - beta) beta): the per-step lower bound on the growth of
// the differential entropy. Zero exactly at the admissible-interval bounds.
double entropy_increment(double beta, std::uint64_t n);

// Entropy of the 0 -> i transition kernel, (n/2) ln(2 pi e (1 - alpha_bar_i)).
// Returns nullopt for i = 0, where the kernel is a point mass (entropy -inf).
std::optional<double> conditional_entropy(const NoiseSchedule& schedule,
                                          std::size_t i, std::uint64_t n);

// conditional_entropy(i + 1) - conditional_entropy(i) for i >= 1, evaluated
// as (n/2) log1p(alpha_bar_i beta_{i+1} / (1 - alpha_bar_i)). Stays positive
// long after the two entropies round to the same double.
double conditional_entropy_increment(const NoiseSchedule& schedule,
                                     std::size_t i, std::uint64_t n);

// conditional_entropy(i) - standard_normal_entropy(n) = (n/2) log1p(-alpha_bar_i),
// the (negative) distance to the limit value.
double conditional_entropy_gap(const NoiseSchedule& schedule, std::size_t i,
                               std::uint64_t n);

}  // namespace difflab::probdiff

#endif  // DIFFLAB_PROBDIFF_ENTROPY_HPP_
