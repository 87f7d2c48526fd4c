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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "difflab/difflab.h"
#include "doctest.h"

namespace {

std::string Scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("difflab_capi_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

TEST_CASE("status names and version") {
  CHECK(std::string(dl_version()) == "0.1.0");
  CHECK(std::string(dl_status_name(DL_OK)) == "ok");
  CHECK(std::string(dl_status_name(DL_SOLVER)) == "solver failure");
}

TEST_CASE("image handles") {
  const double data[6] = {1, 2, 3, 4, 5, 6};
  dl_image* img = nullptr;
  REQUIRE(dl_image_create(3, 2, 1, data, &img) == DL_OK);
  size_t w = 0, h = 0, c = 0;
  REQUIRE(dl_image_shape(img, &w, &h, &c) == DL_OK);
  CHECK(w == 3);
  CHECK(h == 2);
  CHECK(c == 1);
  CHECK(dl_image_data(img)[4] == 5.0);

  const std::string path = Scratch("image") + "/a.pgm";
  double clamped = -1.0;
  REQUIRE(dl_image_write_pnm(img, path.c_str(), 255, &clamped) == DL_OK);
  CHECK(clamped == 0.0);
  dl_image* back = nullptr;
  int maxval = 0;
  REQUIRE(dl_image_read_pnm(path.c_str(), &back, &maxval) == DL_OK);
  CHECK(maxval == 255);
  for (int k = 0; k < 6; ++k) CHECK(dl_image_data(back)[k] == data[k]);
  dl_image_free(back);
  dl_image_free(img);
  dl_image_free(nullptr);

  dl_image* zero = nullptr;
  REQUIRE(dl_image_create(2, 2, 3, nullptr, &zero) == DL_OK);
  CHECK(dl_image_data(zero)[11] == 0.0);
  dl_image_free(zero);
}

TEST_CASE("errors carry codes and messages") {
  dl_image* img = nullptr;
  CHECK(dl_image_create(0, 2, 1, nullptr, &img) == DL_INVALID_ARGUMENT);
  CHECK(img == nullptr);
  CHECK(std::string(dl_last_error()).size() > 0);
  CHECK(dl_image_read_pnm("/nonexistent/x.pgm", &img, nullptr) == DL_IO);
  CHECK(dl_image_create(1, 1, 1, nullptr, nullptr) == DL_INVALID_ARGUMENT);
  CHECK(dl_image_data(nullptr) == nullptr);

  const std::string dir = Scratch("errors");
  std::FILE* f = std::fopen((dir + "/bad.pgm").c_str(), "wb");
  std::fputs("P5\n2 2\n255\n", f);
  std::fclose(f);
  CHECK(dl_image_read_pnm((dir + "/bad.pgm").c_str(), &img, nullptr) == DL_FORMAT);

  double out = 0.0;
  CHECK(dl_entropy_increment(1.5, 1, &out) == DL_OUT_OF_RANGE);
  REQUIRE(dl_entropy_increment(0.5, 1, &out) == DL_OK);
  CHECK(std::string(dl_last_error()).empty());
}

TEST_CASE("numerical entry points") {
  double lo = 0.0, hi = 0.0;
  REQUIRE(dl_admissible_interval(1, &lo, &hi) == DL_OK);
  CHECK(lo == doctest::Approx(0.06245).epsilon(1e-4));
  CHECK(hi == doctest::Approx(0.93755).epsilon(1e-5));
  double inc = 1.0;
  REQUIRE(dl_entropy_increment(lo, 1, &inc) == DL_OK);
  CHECK(std::abs(inc) < 1e-12);

  const double betas[3] = {0.02, 0.02, 0.02};
  double h1 = 0.0, h2 = 0.0;
  REQUIRE(dl_conditional_entropy(betas, 3, 1, 1, &h1) == DL_OK);
  REQUIRE(dl_conditional_entropy(betas, 3, 2, 1, &h2) == DL_OK);
  CHECK(h1 == doctest::Approx(-0.5367).epsilon(1e-3));
  CHECK(h2 > h1);
  CHECK(dl_conditional_entropy(betas, 3, 0, 1, &h1) == DL_OUT_OF_RANGE);
  CHECK(dl_conditional_entropy(betas, 3, 4, 1, &h1) == DL_OUT_OF_RANGE);

  const double u0v[2] = {1.0, -2.0};
  const double zero[2] = {0.0, 0.0};
  dl_image *u0 = nullptr, *g = nullptr, *u2 = nullptr;
  REQUIRE(dl_image_create(2, 1, 1, u0v, &u0) == DL_OK);
  REQUIRE(dl_image_create(2, 1, 1, zero, &g) == DL_OK);
  REQUIRE(dl_jump_to_step(u0, betas, 3, 2, g, &u2) == DL_OK);
  CHECK(dl_image_data(u2)[1] == doctest::Approx(-2.0 * 0.98).epsilon(1e-14));
  dl_image_free(u2);
  dl_image_free(g);
  dl_image_free(u0);
}

TEST_CASE("commands through the C interface") {
  const std::string dir = Scratch("cmd");
  std::vector<double> px(12 * 10);
  for (std::size_t k = 0; k < px.size(); ++k) px[k] = static_cast<double>((k * 37) % 256);
  dl_image* img = nullptr;
  REQUIRE(dl_image_create(12, 10, 1, px.data(), &img) == DL_OK);
  const std::string input = dir + "/in.pgm";
  REQUIRE(dl_image_write_pnm(img, input.c_str(), 255, nullptr) == DL_OK);
  dl_image_free(img);

  dl_probdiff_options pd;
  dl_probdiff_options_init(&pd);
  CHECK(pd.beta == 0.02);
  CHECK(pd.steps == -1);
  const std::string pd_out = dir + "/pd";
  pd.input = input.c_str();
  pd.outdir = pd_out.c_str();
  const size_t record[3] = {0, 3, 9};
  pd.record = record;
  pd.record_count = 3;
  dl_log* log = nullptr;
  REQUIRE(dl_cmd_probdiff(&pd, &log) == DL_OK);
  CHECK(dl_log_rows(log) == 9);
  CHECK(std::string(dl_log_csv(log)).rfind("step,beta,", 0) == 0);
  CHECK(dl_log_file_count(log) == 8);
  CHECK(dl_log_file(log, 99) == nullptr);
  dl_log_free(log);
  CHECK(std::filesystem::exists(pd_out + "/frame_000009.pgm"));

  pd.input = nullptr;
  CHECK(dl_cmd_probdiff(&pd, nullptr) == DL_INVALID_ARGUMENT);

  dl_osmosis_options os;
  dl_osmosis_options_init(&os);
  const std::string os_out = dir + "/os";
  os.input = input.c_str();
  os.guidance = "noise:7";
  os.outdir = os_out.c_str();
  os.steps = 5;
  REQUIRE(dl_cmd_osmosis(&os, &log) == DL_OK);
  CHECK(dl_log_rows(log) == 6);
  dl_log_free(log);

  dl_fp_compare_options fp;
  dl_fp_compare_options_init(&fp);
  CHECK(fp.samples == 100000);
  fp.samples = 10;
  CHECK(dl_cmd_fp_compare(&fp, nullptr) == DL_INVALID_ARGUMENT);
  CHECK(std::string(dl_last_error()).find("1000") != std::string::npos);

  dl_entropy_report_options er;
  dl_entropy_report_options_init(&er);
  CHECK(dl_cmd_entropy_report(&er, nullptr) == DL_INVALID_ARGUMENT);
  er.has_beta = 1;
  er.beta = 0.3;
  er.steps = 4;
  REQUIRE(dl_cmd_entropy_report(&er, &log) == DL_OK);
  CHECK(dl_log_rows(log) == 4);
  dl_log_free(log);
}

}  // namespace
