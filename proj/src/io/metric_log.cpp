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

#include "io/metric_log.hpp"

#include <cstdio>
#include <utility>

#include "core/error.hpp"
#include "io/pnm.hpp"

namespace difflab::io {

namespace {

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

MetricLog::MetricLog(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
  Require(!columns_.empty(), ErrorCode::kInvalidArgument,
          "metric log needs at least one column");
}

void MetricLog::add_row(std::vector<Cell> row) {
  Require(row.size() == columns_.size(), ErrorCode::kShapeMismatch,
          "metric row has " + std::to_string(row.size()) + " cells, expected " +
              std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

std::string MetricLog::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += Quote(columns_[c]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (const auto* i = std::get_if<std::int64_t>(&row[c])) {
        out += std::to_string(*i);
      } else if (const auto* d = std::get_if<double>(&row[c])) {
        out += format_double(*d);
      } else {
        out += Quote(std::get<std::string>(row[c]));
      }
    }
    out += '\n';
  }
  return out;
}

void MetricLog::write(const std::string& path) const {
  write_text_file(path, to_csv());
}

}  // namespace difflab::io
