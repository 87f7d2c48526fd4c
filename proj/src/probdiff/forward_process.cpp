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

#include "probdiff/forward_process.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace difflab::probdiff {

namespace {

// Shared by forward_step and run_trajectory so both round identically.
void BlendInPlace(std::span<double> u, double keep, double add,
                  std::span<const double> noise) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    u[k] = keep * u[k] + add * noise[k];
  }
}

}  // namespace

ImageBuffer forward_step(const ImageBuffer& u_prev, double beta,
                         const ImageBuffer& noise) {
  Require(beta > 0.0 && beta < 1.0, ErrorCode::kOutOfRange,
          "beta must lie in (0, 1)");
  Require(noise.shape() == u_prev.shape(), ErrorCode::kShapeMismatch,
          "noise shape differs from image shape");
  ImageBuffer out = u_prev;
  BlendInPlace(out.data(), std::sqrt(1.0 - beta), std::sqrt(beta),
               noise.data());
  return out;
}

ImageBuffer jump_to_step(const ImageBuffer& u0, const NoiseSchedule& schedule,
                         std::size_t i, const ImageBuffer& noise) {
  Require(i <= schedule.size(), ErrorCode::kOutOfRange,
          "step " + std::to_string(i) + " beyond schedule length " +
              std::to_string(schedule.size()));
  Require(noise.shape() == u0.shape(), ErrorCode::kShapeMismatch,
          "noise shape differs from image shape");
  if (i == 0) return u0;
  ImageBuffer out = u0;
  BlendInPlace(out.data(), std::sqrt(schedule.alpha_bar(i)),
               std::sqrt(schedule.complement(i)), noise.data());
  return out;
}

NoiseSource rng_noise(RngStream& rng) {
  return [&rng](std::size_t, std::span<double> out) {
    for (double& v : out) v = rng.normal();
  };
}

TrajectoryRecord run_trajectory(const ImageBuffer& u0,
                                const NoiseSchedule& schedule,
                                std::span<const std::size_t> record_steps,
                                RngStream& rng) {
  TrajectoryRecord record =
      run_trajectory(u0, schedule, record_steps, rng_noise(rng));
  record.seed = rng.seed();
  return record;
}

TrajectoryRecord run_trajectory(const ImageBuffer& u0,
                                const NoiseSchedule& schedule,
                                std::span<const std::size_t> record_steps,
                                const NoiseSource& noise) {
  for (std::size_t k = 0; k < record_steps.size(); ++k) {
    Require(k == 0 || record_steps[k - 1] < record_steps[k],
            ErrorCode::kInvalidArgument,
            "record steps must be strictly increasing");
    Require(record_steps[k] <= schedule.size(), ErrorCode::kOutOfRange,
            "record step " + std::to_string(record_steps[k]) +
                " beyond schedule length " + std::to_string(schedule.size()));
  }
  TrajectoryRecord record;
  record.schedule = schedule;
  if (record_steps.empty()) return record;

  ImageBuffer u = u0;
  std::vector<double> g(u0.size());
  std::size_t next = 0;
  if (record_steps[0] == 0) {
    record.frames.push_back({0, u0});
    ++next;
  }
  const std::size_t last = record_steps.back();
  for (std::size_t i = 1; i <= last; ++i) {
    noise(i, g);
    const double beta = schedule.beta(i);
    BlendInPlace(u.data(), std::sqrt(1.0 - beta), std::sqrt(beta), g);
    if (record_steps[next] == i) {
      record.frames.push_back({i, u});
      ++next;
    }
  }
  return record;
}

}  // namespace difflab::probdiff
