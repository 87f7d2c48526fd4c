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

#ifndef DIFFLAB_TESTS_UNIT_TEST_UTIL_HPP_
#define DIFFLAB_TESTS_UNIT_TEST_UTIL_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "core/error.hpp"

namespace difflab::testing {

// Error code thrown by `fn`, or nullopt if it returns normally.
template <typename Fn>
std::optional<ErrorCode> ThrownCode(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Fresh empty directory under the system temp dir.
inline std::string ScratchDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("difflab_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace difflab::testing

#endif  // DIFFLAB_TESTS_UNIT_TEST_UTIL_HPP_
