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

#ifndef DIFFLAB_LINALG_SPARSE_MATRIX_HPP_
#define DIFFLAB_LINALG_SPARSE_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace difflab::linalg {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

// Compressed sparse-row matrix. Column indices are sorted and unique within
// each row.
class SparseMatrixCSR {
 public:
  SparseMatrixCSR() = default;
  // Validates the CSR invariants.
  SparseMatrixCSR(std::size_t rows, std::size_t cols,
                  std::vector<std::size_t> row_offsets,
                  std::vector<std::size_t> col_indices,
                  std::vector<double> values);

  // Duplicate (row, col) entries are summed.
  static SparseMatrixCSR from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<Triplet> triplets);
  static SparseMatrixCSR identity(std::size_t n);
  // Keeps every entry of `dense` (row-major) that is not exactly zero.
  static SparseMatrixCSR from_dense(std::size_t rows, std::size_t cols,
                                    std::span<const double> dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return values_.size(); }
  const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::size_t>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }

  // Zero when (row, col) is not stored.
  double coeff(std::size_t row, std::size_t col) const;
  std::vector<double> diagonal() const;
  std::vector<double> column_sums() const;
  std::vector<double> to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

std::vector<double> matvec(const SparseMatrixCSR& a, std::span<const double> x);
void matvec(const SparseMatrixCSR& a, std::span<const double> x,
            std::span<double> y);

// Returns I + scale * A; A must be square.
SparseMatrixCSR add_scaled_identity(const SparseMatrixCSR& a, double scale);

}  // namespace difflab::linalg

#endif  // DIFFLAB_LINALG_SPARSE_MATRIX_HPP_
