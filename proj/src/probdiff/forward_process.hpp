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

#ifndef DIFFLAB_PROBDIFF_FORWARD_PROCESS_HPP_
#define DIFFLAB_PROBDIFF_FORWARD_PROCESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "core/image_buffer.hpp"
#include "core/rng.hpp"
#include "probdiff/schedule.hpp"

namespace difflab::probdiff {

// sqrt(1 - beta) * u_prev + sqrt(beta) * noise, elementwise.
ImageBuffer forward_step(const ImageBuffer& u_prev, double beta,
                         const ImageBuffer& noise);

// sqrt(a) * u0 + sqrt(1 - a) * noise with a = schedule.alpha_bar(i).
// i = 0 returns u0; i = 1 agrees bit for bit with forward_step.
ImageBuffer jump_to_step(const ImageBuffer& u0, const NoiseSchedule& schedule,
                         std::size_t i, const ImageBuffer& noise);

struct TrajectoryFrame {
  std::size_t step;
  ImageBuffer image;
};

struct TrajectoryRecord {
  std::vector<TrajectoryFrame> frames;  // strictly increasing steps
  NoiseSchedule schedule;
  std::uint64_t seed = 0;
};

// Fills `out` with the noise realisation used for the transition into
// `step` (1-based).
using NoiseSource = std::function<void(std::size_t step, std::span<double> out)>;

// Noise drawn from `rng`, one standard normal per element, storage order.
NoiseSource rng_noise(RngStream& rng);

// Iterates forward_step up to the last requested step and keeps the frames
// listed in `record_steps` (strictly increasing, each <= schedule length).
// Step 0 is the supplied image itself.
TrajectoryRecord run_trajectory(const ImageBuffer& u0,
                                const NoiseSchedule& schedule,
                                std::span<const std::size_t> record_steps,
                                RngStream& rng);
TrajectoryRecord run_trajectory(const ImageBuffer& u0,
                                const NoiseSchedule& schedule,
                                std::span<const std::size_t> record_steps,
                                const NoiseSource& noise);

}  // namespace difflab::probdiff

#endif  // DIFFLAB_PROBDIFF_FORWARD_PROCESS_HPP_
