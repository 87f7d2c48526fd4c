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

#include "core/rng.hpp"

#include <cmath>

#include "core/error.hpp"

namespace difflab {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t SplitMix64(std::uint64_t& x) {
  std::uint64_t z = (x += kGoldenGamma);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

constexpr int kLayers = 128;
constexpr double kTailStart = 3.442619855899;
constexpr double kLayerArea = 9.91256303526217e-3;

struct ZigguratTables {
  std::array<double, kLayers + 1> x{};
  std::array<double, kLayers> ratio{};

  ZigguratTables() {
    double f = std::exp(-0.5 * kTailStart * kTailStart);
    x[0] = kLayerArea / f;
    x[1] = kTailStart;
    x[kLayers] = 0.0;
    for (int i = 2; i < kLayers; ++i) {
      x[i] = std::sqrt(-2.0 * std::log(kLayerArea / x[i - 1] + f));
      f = std::exp(-0.5 * x[i] * x[i]);
    }
    for (int i = 0; i < kLayers; ++i) ratio[i] = x[i + 1] / x[i];
  }
};

const ZigguratTables& Tables() {
  static const ZigguratTables tables;
  return tables;
}

// (0, 1], never zero so log() is safe.
double OpenUnit(std::uint64_t word) {
  return static_cast<double>((word >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& s : state_) s = SplitMix64(x);
}

std::uint64_t RngStream::next_word() {
  const std::uint64_t result = Rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

double RngStream::uniform() {
  ++position_;
  return static_cast<double>(next_word() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  Require(bound > 0, ErrorCode::kInvalidArgument, "below(): bound must be > 0");
  ++position_;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const unsigned __int128 m =
        static_cast<unsigned __int128>(next_word()) * bound;
    if (static_cast<std::uint64_t>(m) >= threshold) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

double RngStream::normal_tail(double min, bool negative) {
  double x;
  double y;
  do {
    x = std::log(OpenUnit(next_word())) / min;
    y = std::log(OpenUnit(next_word()));
  } while (-2.0 * y < x * x);
  return negative ? x - min : min - x;
}

double RngStream::normal() {
  ++position_;
  const auto& t = Tables();
  for (;;) {
    const std::uint64_t w = next_word();
    const double u = 2.0 * (static_cast<double>(w >> 11) * 0x1.0p-53) - 1.0;
    const int i = static_cast<int>(w & 0x7F);
    if (std::fabs(u) < t.ratio[i]) return u * t.x[i];
    if (i == 0) return normal_tail(kTailStart, u < 0);
    const double x = u * t.x[i];
    const double f0 = std::exp(-0.5 * (t.x[i] * t.x[i] - x * x));
    const double f1 = std::exp(-0.5 * (t.x[i + 1] * t.x[i + 1] - x * x));
    const double v = static_cast<double>(next_word() >> 11) * 0x1.0p-53;
    if (f1 + v * (f0 - f1) < 1.0) return x;
  }
}

RngStream RngStream::split(std::uint64_t stream_id) const {
  std::uint64_t x = seed_ ^ (stream_id * kGoldenGamma);
  return RngStream(SplitMix64(x));
}

ImageBuffer sample_standard_normal(RngStream& rng, Shape shape) {
  ImageBuffer out(shape);
  for (double& v : out.data()) v = rng.normal();
  return out;
}

}  // namespace difflab
