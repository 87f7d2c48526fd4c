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

#include "linalg/sparse_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace difflab::linalg {

SparseMatrixCSR::SparseMatrixCSR(std::size_t rows, std::size_t cols,
                                 std::vector<std::size_t> row_offsets,
                                 std::vector<std::size_t> col_indices,
                                 std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
  Require(row_offsets_.size() == rows_ + 1, ErrorCode::kInvalidArgument,
          "row_offsets must have rows+1 entries");
  Require(row_offsets_.front() == 0 && row_offsets_.back() == values_.size(),
          ErrorCode::kInvalidArgument, "row_offsets must span all entries");
  Require(col_indices_.size() == values_.size(), ErrorCode::kInvalidArgument,
          "col_indices and values differ in length");
  for (std::size_t r = 0; r < rows_; ++r) {
    Require(row_offsets_[r] <= row_offsets_[r + 1],
            ErrorCode::kInvalidArgument, "row_offsets must be nondecreasing");
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      Require(col_indices_[k] < cols_, ErrorCode::kOutOfRange,
              "column index out of range in row " + std::to_string(r));
      Require(k == row_offsets_[r] || col_indices_[k - 1] < col_indices_[k],
              ErrorCode::kInvalidArgument,
              "column indices unsorted or duplicated in row " +
                  std::to_string(r));
    }
  }
}

SparseMatrixCSR SparseMatrixCSR::from_triplets(std::size_t rows,
                                               std::size_t cols,
                                               std::vector<Triplet> triplets) {
  std::stable_sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  std::vector<std::size_t> offsets(rows + 1, 0);
  std::vector<std::size_t> cols_out;
  std::vector<double> vals;
  cols_out.reserve(triplets.size());
  vals.reserve(triplets.size());
  std::size_t last_row = rows;
  for (const Triplet& t : triplets) {
    Require(t.row < rows && t.col < cols, ErrorCode::kOutOfRange,
            "triplet index out of range");
    if (t.row == last_row && !cols_out.empty() && cols_out.back() == t.col) {
      vals.back() += t.value;
      continue;
    }
    cols_out.push_back(t.col);
    vals.push_back(t.value);
    ++offsets[t.row + 1];
    last_row = t.row;
  }
  for (std::size_t r = 0; r < rows; ++r) offsets[r + 1] += offsets[r];
  return SparseMatrixCSR(rows, cols, std::move(offsets), std::move(cols_out),
                         std::move(vals));
}

SparseMatrixCSR SparseMatrixCSR::identity(std::size_t n) {
  std::vector<std::size_t> offsets(n + 1);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i <= n; ++i) offsets[i] = i;
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return SparseMatrixCSR(n, n, std::move(offsets), std::move(cols),
                         std::vector<double>(n, 1.0));
}

SparseMatrixCSR SparseMatrixCSR::from_dense(std::size_t rows, std::size_t cols,
                                            std::span<const double> dense) {
  Require(dense.size() == rows * cols, ErrorCode::kShapeMismatch,
          "dense matrix size");
  std::vector<std::size_t> offsets(rows + 1, 0);
  std::vector<std::size_t> col_idx;
  std::vector<double> vals;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = dense[r * cols + c];
      if (v != 0.0) {
        col_idx.push_back(c);
        vals.push_back(v);
      }
    }
    offsets[r + 1] = vals.size();
  }
  return SparseMatrixCSR(rows, cols, std::move(offsets), std::move(col_idx),
                         std::move(vals));
}

double SparseMatrixCSR::coeff(std::size_t row, std::size_t col) const {
  const auto first = col_indices_.begin() + row_offsets_[row];
  const auto last = col_indices_.begin() + row_offsets_[row + 1];
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return 0.0;
  return values_[it - col_indices_.begin()];
}

std::vector<double> SparseMatrixCSR::diagonal() const {
  std::vector<double> d(std::min(rows_, cols_), 0.0);
  for (std::size_t r = 0; r < d.size(); ++r) d[r] = coeff(r, r);
  return d;
}

std::vector<double> SparseMatrixCSR::column_sums() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    sums[col_indices_[k]] += values_[k];
  }
  return sums;
}

std::vector<double> SparseMatrixCSR::to_dense() const {
  std::vector<double> dense(rows_ * cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      dense[r * cols_ + col_indices_[k]] = values_[k];
    }
  }
  return dense;
}

void matvec(const SparseMatrixCSR& a, std::span<const double> x,
            std::span<double> y) {
  Require(x.size() == a.cols() && y.size() == a.rows(),
          ErrorCode::kShapeMismatch,
          "matvec: " + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + " matrix with vector of length " +
              std::to_string(x.size()));
  const auto& offsets = a.row_offsets();
  const auto& cols = a.col_indices();
  const auto& vals = a.values();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) {
      acc += vals[k] * x[cols[k]];
    }
    y[r] = acc;
  }
}

std::vector<double> matvec(const SparseMatrixCSR& a,
                           std::span<const double> x) {
  std::vector<double> y(a.rows());
  matvec(a, x, y);
  return y;
}

SparseMatrixCSR add_scaled_identity(const SparseMatrixCSR& a, double scale) {
  Require(a.rows() == a.cols(), ErrorCode::kShapeMismatch,
          "add_scaled_identity needs a square matrix");
  std::vector<Triplet> triplets;
  triplets.reserve(a.nonzeros() + a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    triplets.push_back({r, r, 1.0});
    for (std::size_t k = a.row_offsets()[r]; k < a.row_offsets()[r + 1]; ++k) {
      triplets.push_back({r, a.col_indices()[k], scale * a.values()[k]});
    }
  }
  return SparseMatrixCSR::from_triplets(a.rows(), a.cols(),
                                        std::move(triplets));
}

}  // namespace difflab::linalg
