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

#include "core/image_buffer.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace difflab {

namespace {

void CheckShape(const Shape& shape) {
  Require(shape.width > 0 && shape.height > 0 && shape.channels > 0,
          ErrorCode::kInvalidArgument, "image dimensions must be positive");
}

}  // namespace

ImageBuffer::ImageBuffer(Shape shape, double fill)
    : shape_(shape), data_(shape.elements(), fill) {
  CheckShape(shape_);
  Require(std::isfinite(fill), ErrorCode::kNumerical,
          "image fill value is not finite");
}

ImageBuffer::ImageBuffer(Shape shape, std::vector<double> data)
    : shape_(shape), data_(std::move(data)) {
  CheckShape(shape_);
  Require(data_.size() == shape_.elements(), ErrorCode::kShapeMismatch,
          "image data length " + std::to_string(data_.size()) +
              " does not match " + std::to_string(shape_.width) + "x" +
              std::to_string(shape_.height) + "x" +
              std::to_string(shape_.channels));
  Require(all_finite(), ErrorCode::kNumerical, "image contains NaN or Inf");
}

std::vector<double> ImageBuffer::channel(std::size_t c) const {
  Require(c < shape_.channels, ErrorCode::kOutOfRange, "channel index");
  std::vector<double> plane(shape_.pixels());
  for (std::size_t p = 0; p < plane.size(); ++p) {
    plane[p] = data_[p * shape_.channels + c];
  }
  return plane;
}

void ImageBuffer::set_channel(std::size_t c, std::span<const double> plane) {
  Require(c < shape_.channels, ErrorCode::kOutOfRange, "channel index");
  Require(plane.size() == shape_.pixels(), ErrorCode::kShapeMismatch,
          "channel plane size");
  for (std::size_t p = 0; p < plane.size(); ++p) {
    data_[p * shape_.channels + c] = plane[p];
  }
}

bool ImageBuffer::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::vector<double> mean_value(const ImageBuffer& img) {
  const std::size_t nc = img.channels();
  std::vector<double> sums(nc, 0.0);
  const auto data = img.data();
  for (std::size_t i = 0; i < data.size(); ++i) sums[i % nc] += data[i];
  const double count = static_cast<double>(img.shape().pixels());
  for (double& s : sums) s /= count;
  return sums;
}

}  // namespace difflab
