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

#ifndef DIFFLAB_OSMOSIS_DRIFT_HPP_
#define DIFFLAB_OSMOSIS_DRIFT_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/image_buffer.hpp"

namespace difflab::osmosis {

// Drift vector field on the staggered grid. dx lives on the vertical faces
// between horizontal neighbours, (width-1) x height per channel; dy lives on
// the horizontal faces between vertical neighbours, width x (height-1) per
// channel. Both are stored as channel planes, row-major within a plane.
class DriftField {
 public:
  DriftField(Shape shape, std::vector<double> dx, std::vector<double> dy);
  static DriftField zero(Shape shape);

  const Shape& shape() const { return shape_; }

  // Face between (x, y) and (x + 1, y).
  double dx(std::size_t x, std::size_t y, std::size_t c) const {
    return dx_[(c * shape_.height + y) * (shape_.width - 1) + x];
  }
  // Face between (x, y) and (x, y + 1).
  double dy(std::size_t x, std::size_t y, std::size_t c) const {
    return dy_[(c * (shape_.height - 1) + y) * shape_.width + x];
  }
  const std::vector<double>& dx_values() const { return dx_; }
  const std::vector<double>& dy_values() const { return dy_; }

  double max_abs() const;

 private:
  Shape shape_;
  std::vector<double> dx_;
  std::vector<double> dy_;
};

// Canonical drift d = grad v / v on the faces:
//   dx_{i+1/2,j} = 2 (v_{i+1,j} - v_{i,j}) / (h (v_{i+1,j} + v_{i,j})),
// dy likewise. Paired with the arithmetic-mean flux of assemble_operator this
// makes A v = 0 up to rounding. Requires v > 0.
DriftField canonical_drift(const ImageBuffer& v, double h = 1.0);

// Strictly positive guidance from a standard normal sample g:
//   v = 1 + 255 (clamp(g, -4, 4) + 4) / 8, a value in [1, 256],
// drawn from RngStream(seed) in storage order.
ImageBuffer positive_noise_guidance(Shape shape, std::uint64_t seed);

}  // namespace difflab::osmosis

#endif  // DIFFLAB_OSMOSIS_DRIFT_HPP_
