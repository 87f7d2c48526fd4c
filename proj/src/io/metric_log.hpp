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

#ifndef DIFFLAB_IO_METRIC_LOG_HPP_
#define DIFFLAB_IO_METRIC_LOG_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace difflab::io {

using Cell = std::variant<std::int64_t, double, std::string>;

// CSV table with a fixed header row. Doubles are printed with %.17g so they
// round-trip; strings are quoted only when they contain a comma, quote or
// line break. UTF-8, LF line endings.
class MetricLog {
 public:
  explicit MetricLog(std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const { return rows_.size(); }

  std::string to_csv() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double v);

}  // namespace difflab::io

#endif  // DIFFLAB_IO_METRIC_LOG_HPP_
