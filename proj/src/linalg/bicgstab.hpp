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

#ifndef DIFFLAB_LINALG_BICGSTAB_HPP_
#define DIFFLAB_LINALG_BICGSTAB_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "linalg/sparse_matrix.hpp"

namespace difflab::linalg {

enum class SolveStatus { kConverged, kMaxIter, kBreakdown };

std::string_view to_string(SolveStatus status);

struct SolveOptions {
  double tol = 1e-9;  // on ||b - A x|| / ||b||
  std::size_t max_iter = 10000;
  bool jacobi = false;  // right diagonal preconditioning
  // The recursively updated residual is replaced by b - A x this often.
  std::size_t residual_refresh = 50;
};

struct SolveReport {
  std::size_t iterations = 0;
  double final_relative_residual = 0.0;  // recomputed from b - A x
  SolveStatus status = SolveStatus::kConverged;
  std::size_t restarts = 0;
};

struct SolveResult {
  std::vector<double> x;
  SolveReport report;
};

// Threshold on |rho|, |omega| and |rhat . v| that counts as breakdown.
inline constexpr double kBreakdownThreshold = 1e-30;

// Stabilised bi-conjugate gradients (van der Vorst). A breakdown restarts
// once from the current iterate with a fresh shadow residual; a breakdown
// with no progress since the last restart ends the solve with kBreakdown and
// the current iterate. The converged status is only reported after the true
// residual b - A x has been recomputed and meets the tolerance.
SolveResult bicgstab(const SparseMatrixCSR& a, std::span<const double> b,
                     std::span<const double> x0,
                     const SolveOptions& options = {});

double relative_residual(const SparseMatrixCSR& a, std::span<const double> x,
                         std::span<const double> b);

}  // namespace difflab::linalg

#endif  // DIFFLAB_LINALG_BICGSTAB_HPP_
