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

#include "osmosis/drift.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace difflab::osmosis {

DriftField::DriftField(Shape shape, std::vector<double> dx,
                       std::vector<double> dy)
    : shape_(shape), dx_(std::move(dx)), dy_(std::move(dy)) {
  Require(shape_.elements() > 0, ErrorCode::kInvalidArgument,
          "drift field needs a nonempty shape");
  Require(dx_.size() == (shape_.width - 1) * shape_.height * shape_.channels &&
              dy_.size() ==
                  shape_.width * (shape_.height - 1) * shape_.channels,
          ErrorCode::kShapeMismatch,
          "drift components do not match the staggered grid");
  for (double v : dx_) {
    Require(std::isfinite(v), ErrorCode::kNumerical, "drift is not finite");
  }
  for (double v : dy_) {
    Require(std::isfinite(v), ErrorCode::kNumerical, "drift is not finite");
  }
}

DriftField DriftField::zero(Shape shape) {
  Require(shape.elements() > 0, ErrorCode::kInvalidArgument,
          "drift field needs a nonempty shape");
  return DriftField(
      shape,
      std::vector<double>((shape.width - 1) * shape.height * shape.channels),
      std::vector<double>(shape.width * (shape.height - 1) * shape.channels));
}

double DriftField::max_abs() const {
  double m = 0.0;
  for (double v : dx_) m = std::max(m, std::fabs(v));
  for (double v : dy_) m = std::max(m, std::fabs(v));
  return m;
}

DriftField canonical_drift(const ImageBuffer& v, double h) {
  Require(h > 0.0, ErrorCode::kInvalidArgument, "grid spacing must be > 0");
  for (double x : v.data()) {
    Require(x > 0.0, ErrorCode::kInvalidArgument,
            "canonical drift needs a strictly positive guidance image");
  }
  const Shape s = v.shape();
  std::vector<double> dx((s.width - 1) * s.height * s.channels);
  std::vector<double> dy(s.width * (s.height - 1) * s.channels);
  auto face = [h](double a, double b) { return 2.0 * (b - a) / (h * (a + b)); };
  for (std::size_t c = 0; c < s.channels; ++c) {
    for (std::size_t y = 0; y < s.height; ++y) {
      for (std::size_t x = 0; x + 1 < s.width; ++x) {
        dx[(c * s.height + y) * (s.width - 1) + x] =
            face(v.at(x, y, c), v.at(x + 1, y, c));
      }
    }
    for (std::size_t y = 0; y + 1 < s.height; ++y) {
      for (std::size_t x = 0; x < s.width; ++x) {
        dy[(c * (s.height - 1) + y) * s.width + x] =
            face(v.at(x, y, c), v.at(x, y + 1, c));
      }
    }
  }
  return DriftField(s, std::move(dx), std::move(dy));
}

ImageBuffer positive_noise_guidance(Shape shape, std::uint64_t seed) {
  RngStream rng(seed);
  ImageBuffer v = sample_standard_normal(rng, shape);
  for (double& x : v.data()) {
    x = 1.0 + 255.0 * (std::clamp(x, -4.0, 4.0) + 4.0) / 8.0;
  }
  return v;
}

}  // namespace difflab::osmosis
