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

#include "osmosis/operator.hpp"

#include "core/error.hpp"

namespace difflab::osmosis {

namespace {

void AddFace(std::vector<linalg::Triplet>& t, std::size_t p, std::size_t q,
             double d, double h) {
  const double from_p = (1.0 / h + 0.5 * d) / h;
  const double from_q = (-1.0 / h + 0.5 * d) / h;
  t.push_back({p, p, -from_p});
  t.push_back({p, q, -from_q});
  t.push_back({q, p, from_p});
  t.push_back({q, q, from_q});
}

}  // namespace

OsmosisOperator assemble_operator(const DriftField& d, std::size_t width,
                                  std::size_t height, double h) {
  Require(d.shape().width == width && d.shape().height == height,
          ErrorCode::kShapeMismatch, "drift field shape differs from image");
  Require(h > 0.0, ErrorCode::kInvalidArgument, "grid spacing must be > 0");
  OsmosisOperator op;
  op.width = width;
  op.height = height;
  op.h = h;
  const std::size_t n = width * height;
  for (std::size_t c = 0; c < d.shape().channels; ++c) {
    std::vector<linalg::Triplet> t;
    t.reserve(4 * (2 * n) + n);
    for (std::size_t p = 0; p < n; ++p) t.push_back({p, p, 0.0});
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x + 1 < width; ++x) {
        const std::size_t p = y * width + x;
        AddFace(t, p, p + 1, d.dx(x, y, c), h);
      }
    }
    for (std::size_t y = 0; y + 1 < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        const std::size_t p = y * width + x;
        AddFace(t, p, p + width, d.dy(x, y, c), h);
      }
    }
    op.channels.push_back(
        linalg::SparseMatrixCSR::from_triplets(n, n, std::move(t)));
  }
  return op;
}

OsmosisOperator assemble_operator(const DriftField& d, double h) {
  return assemble_operator(d, d.shape().width, d.shape().height, h);
}

double drift_grid_number(const DriftField& d, double h) {
  return 0.5 * h * d.max_abs();
}

}  // namespace difflab::osmosis
