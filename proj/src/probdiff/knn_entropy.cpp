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

#include "probdiff/knn_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace difflab::probdiff {

namespace {

constexpr std::size_t kLeafSize = 8;

double DigammaInteger(std::size_t m) {
  double h = 0.0;
  for (std::size_t j = 1; j < m; ++j) h += 1.0 / static_cast<double>(j);
  return h - std::numbers::egamma;
}

double LogUnitBallVolume(std::size_t d) {
  const double half = 0.5 * static_cast<double>(d);
  return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

// Implicit k-d tree over an index permutation: the median of [lo, hi) along
// axis depth % dim sits at the midpoint; ranges of at most kLeafSize points
// are leaves.
class KdTree {
 public:
  KdTree(std::span<const double> points, std::size_t dim)
      : points_(points), dim_(dim), index_(points.size() / dim) {
    std::iota(index_.begin(), index_.end(), std::size_t{0});
    Build(0, index_.size(), 0);
  }

  // Squared distance from point `self` to its k-th nearest other point.
  double KthDistanceSquared(std::size_t self, std::size_t k) const {
    std::vector<double> best(k, std::numeric_limits<double>::infinity());
    Query(self, 0, index_.size(), 0, best);
    return best.back();
  }

 private:
  double Coord(std::size_t p, std::size_t axis) const {
    return points_[p * dim_ + axis];
  }

  void Build(std::size_t lo, std::size_t hi, std::size_t depth) {
    if (hi - lo <= kLeafSize) return;
    const std::size_t axis = depth % dim_;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::nth_element(index_.begin() + lo, index_.begin() + mid,
                     index_.begin() + hi, [&](std::size_t a, std::size_t b) {
                       return Coord(a, axis) < Coord(b, axis);
                     });
    Build(lo, mid, depth + 1);
    Build(mid + 1, hi, depth + 1);
  }

  void Offer(std::size_t self, std::size_t other,
             std::vector<double>& best) const {
    if (other == self) return;
    double d2 = 0.0;
    for (std::size_t a = 0; a < dim_; ++a) {
      const double diff = Coord(self, a) - Coord(other, a);
      d2 += diff * diff;
    }
    if (d2 >= best.back()) return;
    auto it = std::upper_bound(best.begin(), best.end(), d2);
    best.insert(it, d2);
    best.pop_back();
  }

  void Query(std::size_t self, std::size_t lo, std::size_t hi,
             std::size_t depth, std::vector<double>& best) const {
    if (hi - lo <= kLeafSize) {
      for (std::size_t i = lo; i < hi; ++i) Offer(self, index_[i], best);
      return;
    }
    const std::size_t axis = depth % dim_;
    const std::size_t mid = lo + (hi - lo) / 2;
    const double diff = Coord(self, axis) - Coord(index_[mid], axis);
    Offer(self, index_[mid], best);
    if (diff < 0.0) {
      Query(self, lo, mid, depth + 1, best);
      if (diff * diff < best.back()) Query(self, mid + 1, hi, depth + 1, best);
    } else {
      Query(self, mid + 1, hi, depth + 1, best);
      if (diff * diff < best.back()) Query(self, lo, mid, depth + 1, best);
    }
  }

  std::span<const double> points_;
  std::size_t dim_;
  std::vector<std::size_t> index_;
};

// Sum of ln eps_i; NaN when some eps_i is zero.
double SumLogDistances(std::span<const double> points, std::size_t dim,
                       std::size_t k) {
  const KdTree tree(points, dim);
  const std::size_t n = points.size() / dim;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d2 = tree.KthDistanceSquared(i, k);
    if (d2 == 0.0) return std::numeric_limits<double>::quiet_NaN();
    sum += 0.5 * std::log(d2);
  }
  return sum;
}

}  // namespace

double knn_entropy_estimate(std::span<const double> samples, std::size_t dim,
                            const KnnEntropyOptions& options) {
  Require(dim >= 1 && dim <= kMaxKnnDimension, ErrorCode::kInvalidArgument,
          "k-NN entropy supports dimensions 1..4");
  Require(samples.size() % dim == 0, ErrorCode::kShapeMismatch,
          "sample buffer is not a whole number of points");
  Require(options.k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
  const std::size_t n = samples.size() / dim;
  Require(n >= options.k + 1, ErrorCode::kInvalidArgument,
          "k-NN entropy needs at least k + 1 samples");

  double sum_log = SumLogDistances(samples, dim, options.k);
  if (std::isnan(sum_log)) {
    double scale = 1.0;
    for (double v : samples) scale = std::max(scale, std::fabs(v));
    std::vector<double> jittered(samples.begin(), samples.end());
    RngStream rng(options.jitter_seed);
    for (double& v : jittered) v += options.jitter * scale * rng.normal();
    sum_log = SumLogDistances(jittered, dim, options.k);
    Require(!std::isnan(sum_log), ErrorCode::kNumerical,
            "k-NN entropy: coincident samples survive jitter");
  }
  const double nd = static_cast<double>(n);
  return DigammaInteger(n) - DigammaInteger(options.k) +
         LogUnitBallVolume(dim) + static_cast<double>(dim) * sum_log / nd;
}

double knn_entropy_estimate(const std::vector<std::vector<double>>& samples,
                            const KnnEntropyOptions& options) {
  Require(!samples.empty(), ErrorCode::kInvalidArgument, "no samples");
  const std::size_t dim = samples.front().size();
  std::vector<double> flat;
  flat.reserve(samples.size() * dim);
  for (const auto& s : samples) {
    Require(s.size() == dim, ErrorCode::kShapeMismatch,
            "samples differ in dimension");
    flat.insert(flat.end(), s.begin(), s.end());
  }
  return knn_entropy_estimate(flat, dim, options);
}

}  // namespace difflab::probdiff
