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

#include "fokker_planck/density_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "core/error.hpp"

namespace difflab::fp {

void GridSpec::validate() const {
  Require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
          ErrorCode::kInvalidArgument, "grid bounds must satisfy lo < hi");
  Require(cells >= 1, ErrorCode::kInvalidArgument, "grid needs >= 1 cell");
}

DensityGrid::DensityGrid(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
  spec_.validate();
  Require(values_.size() == spec_.cells, ErrorCode::kShapeMismatch,
          "density length differs from cell count");
  for (double v : values_) {
    Require(std::isfinite(v) && v >= 0.0, ErrorCode::kNumerical,
            "density values must be finite and >= 0");
  }
}

DensityGrid::DensityGrid(GridSpec spec)
    : DensityGrid(spec, std::vector<double>(spec.cells, 0.0)) {}

double DensityGrid::mass() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * h();
}

void DensityGrid::normalise() {
  const double m = mass();
  Require(m > 0.0, ErrorCode::kNumerical, "cannot normalise a zero density");
  for (double& v : values_) v /= m;
}

double DensityGrid::mean() const {
  double s = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    s += values_[k] * spec_.center(k);
  }
  return s * h() / mass();
}

double DensityGrid::variance() const {
  const double mu = mean();
  double s = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double d = spec_.center(k) - mu;
    s += values_[k] * d * d;
  }
  return s * h() / mass();
}

DensityGrid gaussian_density(const GridSpec& spec, double mean,
                             double stddev) {
  spec.validate();
  Require(stddev > 0.0, ErrorCode::kInvalidArgument, "stddev must be > 0");
  const double scale = 1.0 / (stddev * std::numbers::sqrt2);
  std::vector<double> values(spec.cells);
  const double h = spec.h();
  for (std::size_t k = 0; k < spec.cells; ++k) {
    const double a = (spec.face(k) - mean) * scale;
    const double b = (spec.face(k + 1) - mean) * scale;
    // Difference of erfc on the far tail side avoids cancellation.
    const double p = a >= 0.0 ? 0.5 * (std::erfc(a) - std::erfc(b))
                              : 0.5 * (std::erfc(-b) - std::erfc(-a));
    values[k] = std::max(p, 0.0) / h;
  }
  DensityGrid out(spec, std::move(values));
  out.normalise();
  return out;
}

double l1_distance(const DensityGrid& a, const DensityGrid& b) {
  Require(a.cells() == b.cells() && a.spec().lo == b.spec().lo &&
              a.spec().hi == b.spec().hi,
          ErrorCode::kShapeMismatch, "densities live on different grids");
  double s = 0.0;
  for (std::size_t k = 0; k < a.cells(); ++k) {
    s += std::fabs(a.values()[k] - b.values()[k]);
  }
  return s * a.h();
}

DensityGrid coarsen(const DensityGrid& fine, std::size_t factor) {
  Require(factor >= 1 && fine.cells() % factor == 0,
          ErrorCode::kInvalidArgument,
          "coarsening factor must divide the cell count");
  GridSpec spec = fine.spec();
  spec.cells /= factor;
  std::vector<double> values(spec.cells, 0.0);
  for (std::size_t k = 0; k < fine.cells(); ++k) {
    values[k / factor] += fine.values()[k];
  }
  for (double& v : values) v /= static_cast<double>(factor);
  return DensityGrid(spec, std::move(values));
}

HistogramResult histogram_density(std::span<const double> samples,
                                  const GridSpec& spec) {
  spec.validate();
  Require(samples.size() >= 1000, ErrorCode::kInvalidArgument,
          "histogram_density needs at least 1000 samples");
  std::vector<double> counts(spec.cells, 0.0);
  std::size_t outside = 0;
  const double h = spec.h();
  for (double x : samples) {
    if (!(x >= spec.lo && x <= spec.hi)) {
      ++outside;
      continue;
    }
    auto k = static_cast<std::size_t>((x - spec.lo) / h);
    if (k >= spec.cells) k = spec.cells - 1;
    counts[k] += 1.0;
  }
  const std::size_t inside = samples.size() - outside;
  if (inside > 0) {
    const double norm = 1.0 / (static_cast<double>(inside) * h);
    for (double& c : counts) c *= norm;
  }
  return {DensityGrid(spec, std::move(counts)), inside, outside};
}

}  // namespace difflab::fp
