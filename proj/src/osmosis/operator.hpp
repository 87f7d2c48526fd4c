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

#ifndef DIFFLAB_OSMOSIS_OPERATOR_HPP_
#define DIFFLAB_OSMOSIS_OPERATOR_HPP_

#include <cstddef>
#include <vector>

#include "linalg/sparse_matrix.hpp"
#include "osmosis/drift.hpp"

namespace difflab::osmosis {

// Discrete osmosis operator A with du/dt = A u, one matrix per channel over
// the width*height pixels (index y * width + x).
struct OsmosisOperator {
  std::size_t width = 0;
  std::size_t height = 0;
  double h = 1.0;
  std::vector<linalg::SparseMatrixCSR> channels;
};

// Finite-volume form of  du/dt = Laplace(u) - div(d u). The flux through the
// face between neighbours p -> q is
//   J = -(u_q - u_p) / h + d (u_p + u_q) / 2,
// removed from p and added to q (each divided by h). No flux crosses the image
// boundary. Consequences:
//   * every column of A sums to zero (up to rounding), so the mean is kept;
//   * off-diagonals are >= 0 whenever |d| h / 2 <= 1 on every face.
OsmosisOperator assemble_operator(const DriftField& d, std::size_t width,
                                  std::size_t height, double h = 1.0);
OsmosisOperator assemble_operator(const DriftField& d, double h = 1.0);

// max over faces of |d| h / 2; off-diagonals are nonnegative when <= 1.
double drift_grid_number(const DriftField& d, double h = 1.0);

}  // namespace difflab::osmosis

#endif  // DIFFLAB_OSMOSIS_OPERATOR_HPP_
