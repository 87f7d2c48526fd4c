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

#include "core/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace difflab {

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t target : mapping_) {
    Require(target < mapping_.size() && !seen[target],
            ErrorCode::kInvalidArgument, "mapping is not a bijection");
    seen[target] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::random(std::size_t n, RngStream& rng) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(m[i - 1], m[rng.below(i)]);
  }
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t j = 0; j < mapping_.size(); ++j) inv[mapping_[j]] = j;
  return Permutation(std::move(inv));
}

ImageBuffer apply_permutation(const ImageBuffer& img, const Permutation& p,
                              PermutationMode mode) {
  const std::size_t expected = mode == PermutationMode::kPixels
                                   ? img.shape().pixels()
                                   : img.size();
  Require(p.size() == expected, ErrorCode::kShapeMismatch,
          "permutation size " + std::to_string(p.size()) + " != " +
              std::to_string(expected));
  ImageBuffer out(img.shape());
  const auto in = img.data();
  auto dst = out.data();
  if (mode == PermutationMode::kElements) {
    for (std::size_t j = 0; j < in.size(); ++j) dst[p(j)] = in[j];
    return out;
  }
  const std::size_t nc = img.channels();
  for (std::size_t j = 0; j < p.size(); ++j) {
    const std::size_t to = p(j) * nc;
    const std::size_t from = j * nc;
    for (std::size_t c = 0; c < nc; ++c) dst[to + c] = in[from + c];
  }
  return out;
}

}  // namespace difflab
