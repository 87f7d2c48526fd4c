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

#ifndef DIFFLAB_IO_PNM_HPP_
#define DIFFLAB_IO_PNM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "core/image_buffer.hpp"

namespace difflab::io {

struct PnmImage {
  ImageBuffer image;  // samples as reals in [0, maxval]
  int maxval = 255;
};

// Netpbm grey and colour maps: P2/P5 give one channel, P3/P6 three.
// Binary samples are one byte for maxval < 256 and two big-endian bytes
// otherwise. '#' comments are accepted anywhere whitespace is.
PnmImage decode_pnm(const std::vector<std::uint8_t>& bytes);
PnmImage read_pnm(const std::string& path);

struct PnmWriteReport {
  // Fraction of samples outside [0, maxval] before clamping.
  double clamped_fraction = 0.0;
};

// Binary P5 (one channel) or P6 (three channels) with header
// "P5\n<width> <height>\n<maxval>\n". Samples are rounded to nearest (half
// away from zero) and clamped to [0, maxval].
std::vector<std::uint8_t> encode_pnm(const ImageBuffer& img, int maxval,
                                     PnmWriteReport* report = nullptr);
PnmWriteReport write_pnm(const ImageBuffer& img, const std::string& path,
                         int maxval = 255);

// Affine display map [lo, hi] -> [0, maxval] for standardised frames.
struct DisplayTransform {
  double lo = -4.0;
  double hi = 4.0;
  int maxval = 255;

  double forward(double x) const { return (x - lo) / (hi - lo) * maxval; }
  double inverse(double y) const { return lo + y / maxval * (hi - lo); }
};

ImageBuffer to_display(const ImageBuffer& img, const DisplayTransform& t);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace difflab::io

#endif  // DIFFLAB_IO_PNM_HPP_
