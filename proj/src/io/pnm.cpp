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

#include "io/pnm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "core/error.hpp"

namespace difflab::io {

namespace {

bool IsSpace(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class Cursor {
 public:
  explicit Cursor(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  void SkipWhitespaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  // Decimal integer after optional whitespace/comments.
  std::uint64_t Unsigned(const char* what) {
    SkipWhitespaceAndComments();
    Require(pos_ < bytes_.size(), ErrorCode::kFormat,
            std::string("PNM: truncated before ") + what);
    Require(bytes_[pos_] >= '0' && bytes_[pos_] <= '9', ErrorCode::kFormat,
            std::string("PNM: expected a number for ") + what);
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + (bytes_[pos_] - '0');
      Require(v <= 0xFFFFFFFFull, ErrorCode::kFormat,
              std::string("PNM: number too large for ") + what);
      ++pos_;
    }
    return v;
  }

  std::uint8_t Byte() {
    Require(pos_ < bytes_.size(), ErrorCode::kFormat,
            "PNM: truncated raster");
    return bytes_[pos_++];
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

PnmImage decode_pnm(const std::vector<std::uint8_t>& bytes) {
  Require(bytes.size() >= 2 && bytes[0] == 'P', ErrorCode::kFormat,
          "PNM: missing magic number");
  const char kind = static_cast<char>(bytes[1]);
  Require(kind == '2' || kind == '3' || kind == '5' || kind == '6',
          ErrorCode::kFormat,
          std::string("PNM: unsupported format P") + kind);
  const bool plain = kind == '2' || kind == '3';
  const std::size_t channels = (kind == '3' || kind == '6') ? 3 : 1;

  Cursor cur(bytes);
  cur.Byte();
  cur.Byte();
  Require(cur.remaining() > 0 && (IsSpace(bytes[2]) || bytes[2] == '#'),
          ErrorCode::kFormat, "PNM: malformed magic number");
  const std::uint64_t width = cur.Unsigned("width");
  const std::uint64_t height = cur.Unsigned("height");
  const std::uint64_t maxval = cur.Unsigned("maxval");
  Require(width > 0 && height > 0, ErrorCode::kFormat,
          "PNM: zero image dimension");
  Require(maxval >= 1 && maxval <= 65535, ErrorCode::kFormat,
          "PNM: unsupported maxval " + std::to_string(maxval));

  const Shape shape{width, height, channels};
  std::vector<double> data(shape.elements());
  if (plain) {
    for (double& v : data) {
      const std::uint64_t s = cur.Unsigned("sample");
      Require(s <= maxval, ErrorCode::kFormat, "PNM: sample exceeds maxval");
      v = static_cast<double>(s);
    }
  } else {
    // Exactly one whitespace byte separates maxval from the raster.
    Require(IsSpace(cur.Byte()), ErrorCode::kFormat,
            "PNM: missing whitespace after maxval");
    const std::size_t bytes_per_sample = maxval < 256 ? 1 : 2;
    Require(cur.remaining() >= data.size() * bytes_per_sample,
            ErrorCode::kFormat, "PNM: truncated raster");
    for (double& v : data) {
      std::uint32_t s = cur.Byte();
      if (bytes_per_sample == 2) s = (s << 8) | cur.Byte();
      Require(s <= maxval, ErrorCode::kFormat, "PNM: sample exceeds maxval");
      v = static_cast<double>(s);
    }
  }
  return {ImageBuffer(shape, std::move(data)), static_cast<int>(maxval)};
}

PnmImage read_pnm(const std::string& path) {
  return decode_pnm(read_file(path));
}

std::vector<std::uint8_t> encode_pnm(const ImageBuffer& img, int maxval,
                                     PnmWriteReport* report) {
  Require(maxval >= 1 && maxval <= 65535, ErrorCode::kInvalidArgument,
          "PNM: maxval must lie in 1..65535");
  Require(img.channels() == 1 || img.channels() == 3,
          ErrorCode::kInvalidArgument,
          "PNM output needs 1 or 3 channels");
  const std::string header = std::string(img.channels() == 1 ? "P5" : "P6") +
                             "\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n" +
                             std::to_string(maxval) + "\n";
  const bool wide = maxval >= 256;
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + img.size() * (wide ? 2 : 1));
  std::size_t clamped = 0;
  const double top = static_cast<double>(maxval);
  for (double v : img.data()) {
    if (v < 0.0 || v > top) ++clamped;
    const auto s = static_cast<std::uint32_t>(std::clamp(std::round(v), 0.0, top));
    if (wide) out.push_back(static_cast<std::uint8_t>(s >> 8));
    out.push_back(static_cast<std::uint8_t>(s & 0xFF));
  }
  if (report) {
    report->clamped_fraction =
        static_cast<double>(clamped) / static_cast<double>(img.size());
  }
  return out;
}

PnmWriteReport write_pnm(const ImageBuffer& img, const std::string& path,
                         int maxval) {
  PnmWriteReport report;
  write_file(path, encode_pnm(img, maxval, &report));
  return report;
}

ImageBuffer to_display(const ImageBuffer& img, const DisplayTransform& t) {
  ImageBuffer out = img;
  for (double& v : out.data()) v = t.forward(v);
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  Require(!in.bad(), ErrorCode::kIo, "read failed: " + path);
  return bytes;
}

void write_file(const std::string& path,
                const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(static_cast<bool>(out), ErrorCode::kIo, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  Require(static_cast<bool>(out), ErrorCode::kIo, "write failed: " + path);
}

void write_text_file(const std::string& path, const std::string& text) {
  write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

}  // namespace difflab::io
