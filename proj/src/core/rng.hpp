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

#ifndef DIFFLAB_CORE_RNG_HPP_
#define DIFFLAB_CORE_RNG_HPP_

#include <array>
#include <cstdint>

#include "core/image_buffer.hpp"

namespace difflab {

// Deterministic pseudo-random stream.
//
// Generation algorithm (pinned, part of the reproducibility contract):
//   * state: xoshiro256++ (Blackman & Vigna), its four state words filled by
//     consecutive SplitMix64 outputs started at `seed`;
//   * standard normals: the 128-layer ziggurat of Marsaglia & Tsang in
//     Doornik's ZIGNOR form. Each attempt consumes one 64-bit word: bits
//     11..63 give the uniform, bits 0..6 give the layer. Tail and wedge
//     rejections consume extra words.
//
// position() counts variates handed out (normals and bounded integers), not
// raw words. Identical seeds and identical call sequences give bit-identical
// results on any platform with IEEE-754 doubles and a correctly rounded
// exp/log.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

  double normal();
  // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
  // rejection, so the result is unbiased.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  // Independent child stream; child seed is SplitMix64(seed ^ (id * phi)).
  RngStream split(std::uint64_t stream_id) const;

 private:
  std::uint64_t next_word();
  double normal_tail(double min, bool negative);

  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::array<std::uint64_t, 4> state_{};
};

// Buffer of i.i.d. N(0,1) draws in storage order. Advances rng by
// shape.elements() positions.
ImageBuffer sample_standard_normal(RngStream& rng, Shape shape);

}  // namespace difflab

#endif  // DIFFLAB_CORE_RNG_HPP_
