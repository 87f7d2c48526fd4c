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

#ifndef DIFFLAB_CORE_PERMUTATION_HPP_
#define DIFFLAB_CORE_PERMUTATION_HPP_

#include <cstddef>
#include <vector>

#include "core/image_buffer.hpp"
#include "core/rng.hpp"

namespace difflab {

// Bijection on {0, ..., n-1}. Applying it sends entry j to slot mapping[j].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  // Uniform random permutation by Fisher-Yates.
  static Permutation random(std::size_t n, RngStream& rng);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator()(std::size_t j) const { return mapping_[j]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> mapping_;
};

enum class PermutationMode {
  // Permutation over width*height pixel positions, same for every channel.
  kPixels,
  // Permutation over all width*height*channels entries.
  kElements,
};

// output[p(j)] = input[j].
ImageBuffer apply_permutation(const ImageBuffer& img, const Permutation& p,
                              PermutationMode mode = PermutationMode::kPixels);

}  // namespace difflab

#endif  // DIFFLAB_CORE_PERMUTATION_HPP_
