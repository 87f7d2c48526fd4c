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

#ifndef DIFFLAB_PROBDIFF_KNN_ENTROPY_HPP_
#define DIFFLAB_PROBDIFF_KNN_ENTROPY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace difflab::probdiff {

inline constexpr std::size_t kMaxKnnDimension = 4;

struct KnnEntropyOptions {
  std::size_t k = 3;
  // Applied only when two samples coincide: every coordinate gets
  // N(0, (jitter * max(1, max|x|))^2) noise from RngStream(jitter_seed).
  double jitter = 1e-10;
  std::uint64_t jitter_seed = 0x6b6e6e;
};

// Kozachenko-Leonenko estimate of the differential entropy (nats):
//   psi(N) - psi(k) + ln V_d + (d / N) sum_i ln eps_i,
// eps_i the Euclidean distance from sample i to its k-th nearest neighbour and
// V_d the volume of the unit d-ball. `samples` holds N points of dimension
// `dim` back to back. Dimension is limited to kMaxKnnDimension; the estimator
// is too biased beyond that at practical sample sizes.
double knn_entropy_estimate(std::span<const double> samples, std::size_t dim,
                            const KnnEntropyOptions& options = {});

double knn_entropy_estimate(const std::vector<std::vector<double>>& samples,
                            const KnnEntropyOptions& options = {});

}  // namespace difflab::probdiff

#endif  // DIFFLAB_PROBDIFF_KNN_ENTROPY_HPP_
