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

#ifndef DIFFLAB_CORE_IMAGE_BUFFER_HPP_
#define DIFFLAB_CORE_IMAGE_BUFFER_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace difflab {

struct Shape {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 1;

  std::size_t pixels() const { return width * height; }
  std::size_t elements() const { return width * height * channels; }
  bool operator==(const Shape&) const = default;
};

// Dense real raster, row-major with interleaved channels:
// index = (y * width + x) * channels + c. All values are finite.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  explicit ImageBuffer(Shape shape, double fill = 0.0);
  ImageBuffer(Shape shape, std::vector<double> data);

  const Shape& shape() const { return shape_; }
  std::size_t width() const { return shape_.width; }
  std::size_t height() const { return shape_.height; }
  std::size_t channels() const { return shape_.channels; }
  std::size_t size() const { return data_.size(); }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  double& at(std::size_t x, std::size_t y, std::size_t c = 0) {
    return data_[(y * shape_.width + x) * shape_.channels + c];
  }
  double at(std::size_t x, std::size_t y, std::size_t c = 0) const {
    return data_[(y * shape_.width + x) * shape_.channels + c];
  }
  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  // Copies one channel out as a planar vector of width*height values.
  std::vector<double> channel(std::size_t c) const;
  void set_channel(std::size_t c, std::span<const double> plane);

  bool all_finite() const;

  bool operator==(const ImageBuffer&) const = default;

 private:
  Shape shape_;
  std::vector<double> data_;
};

// Arithmetic mean of each channel.
std::vector<double> mean_value(const ImageBuffer& img);

}  // namespace difflab

#endif  // DIFFLAB_CORE_IMAGE_BUFFER_HPP_
