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

#ifndef DIFFLAB_FOKKER_PLANCK_DENSITY_GRID_HPP_
#define DIFFLAB_FOKKER_PLANCK_DENSITY_GRID_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace difflab::fp {

// Uniform 1-D cell grid on [lo, hi].
struct GridSpec {
  double lo = -6.0;
  double hi = 6.0;
  std::size_t cells = 200;

  double h() const { return (hi - lo) / static_cast<double>(cells); }
  double center(std::size_t k) const {
    return lo + (static_cast<double>(k) + 0.5) * h();
  }
  double face(std::size_t k) const {  // left face of cell k
    return lo + static_cast<double>(k) * h();
  }
  void validate() const;
};

// Piecewise-constant probability density: values[k] is the mean density on
// cell k, so h * sum(values) is the total mass.
class DensityGrid {
 public:
  DensityGrid(GridSpec spec, std::vector<double> values);
  explicit DensityGrid(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  double h() const { return spec_.h(); }
  std::size_t cells() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double mass() const;
  // Scales to unit mass; throws when the mass is zero.
  void normalise();
  double mean() const;
  double variance() const;

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

// Exact cell averages of the N(mean, stddev^2) density, renormalised to unit
// mass on the grid.
DensityGrid gaussian_density(const GridSpec& spec, double mean, double stddev);

// h * sum |a - b|; grids must match.
double l1_distance(const DensityGrid& a, const DensityGrid& b);

// Merges `factor` consecutive cells (mass conserving).
DensityGrid coarsen(const DensityGrid& fine, std::size_t factor);

struct HistogramResult {
  DensityGrid density;
  std::size_t inside = 0;
  std::size_t outside = 0;  // samples beyond [lo, hi], not binned
};

// Normalised histogram of the in-domain samples; needs >= 1000 samples.
HistogramResult histogram_density(std::span<const double> samples,
                                  const GridSpec& spec);

}  // namespace difflab::fp

#endif  // DIFFLAB_FOKKER_PLANCK_DENSITY_GRID_HPP_
