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

#include "osmosis/evolution.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace difflab::osmosis {

namespace {

void RequirePositive(const ImageBuffer& u, const char* what) {
  for (double x : u.data()) {
    if (!(x > 0.0)) {
      Fail(ErrorCode::kInvalidArgument,
           std::string(what) + " must be strictly positive");
    }
  }
}

// (1 + r) log1p(r) - r, accurate near r = 0.
double Phi(double r) {
  if (std::fabs(r) < 1e-3) {
    // sum_{k>=2} (-1)^k r^k / (k (k - 1))
    double term = r * r;
    double sum = 0.0;
    for (int k = 2; k <= 8; ++k) {
      sum += ((k % 2 == 0) ? 1.0 : -1.0) * term / (k * (k - 1));
      term *= r;
    }
    return sum;
  }
  return (1.0 + r) * std::log1p(r) - r;
}

}  // namespace

ImplicitStepper::ImplicitStepper(const OsmosisOperator& op, double tau,
                                 ImplicitOptions options)
    : width_(op.width), height_(op.height), tau_(tau), options_(options) {
  Require(tau > 0.0, ErrorCode::kInvalidArgument, "tau must be > 0");
  systems_.reserve(op.channels.size());
  for (const auto& a : op.channels) {
    systems_.push_back(linalg::add_scaled_identity(a, -tau));
  }
}

ImageBuffer ImplicitStepper::step(
    const ImageBuffer& u, std::vector<linalg::SolveReport>* reports) const {
  Require(u.width() == width_ && u.height() == height_ &&
              u.channels() == systems_.size(),
          ErrorCode::kShapeMismatch, "image does not match the operator");
  linalg::SolveOptions so;
  so.tol = options_.tol;
  so.max_iter = options_.max_iter;
  so.jacobi = options_.jacobi;
  ImageBuffer out(u.shape());
  if (reports) reports->clear();
  for (std::size_t c = 0; c < systems_.size(); ++c) {
    const std::vector<double> b = u.channel(c);
    linalg::SolveResult solved = linalg::bicgstab(systems_[c], b, b, so);
    if (solved.report.status != linalg::SolveStatus::kConverged) {
      std::ostringstream msg;
      msg << "osmosis step: channel " << c << " "
          << linalg::to_string(solved.report.status) << " after "
          << solved.report.iterations << " iterations, relative residual "
          << solved.report.final_relative_residual;
      Fail(ErrorCode::kSolver, msg.str());
    }
    out.set_channel(c, solved.x);
    if (reports) reports->push_back(solved.report);
  }
  return out;
}

ImageBuffer implicit_step(const ImageBuffer& u, const OsmosisOperator& op,
                          double tau, const ImplicitOptions& options,
                          std::vector<linalg::SolveReport>* reports) {
  RequirePositive(u, "osmosis input");
  return ImplicitStepper(op, tau, options).step(u, reports);
}

std::vector<OsmosisFrame> evolve(const ImageBuffer& f, const DriftField& d,
                                 double tau,
                                 std::span<const std::size_t> record_steps,
                                 const ImplicitOptions& options,
                                 const StepObserver& observer, double h) {
  RequirePositive(f, "osmosis input");
  Require(d.shape() == f.shape(), ErrorCode::kShapeMismatch,
          "drift field shape differs from image");
  for (std::size_t k = 1; k < record_steps.size(); ++k) {
    Require(record_steps[k - 1] < record_steps[k], ErrorCode::kInvalidArgument,
            "record steps must be strictly increasing");
  }
  std::vector<OsmosisFrame> frames;
  if (record_steps.empty()) return frames;

  const ImplicitStepper stepper(assemble_operator(d, h), tau, options);
  std::size_t next = 0;
  if (record_steps[0] == 0) {
    frames.push_back({0, f});
    ++next;
  }
  ImageBuffer u = f;
  std::vector<linalg::SolveReport> reports;
  for (std::size_t i = 1; i <= record_steps.back(); ++i) {
    u = stepper.step(u, &reports);
    if (observer) observer(i, u, reports);
    if (record_steps[next] == i) {
      frames.push_back({i, u});
      ++next;
    }
  }
  return frames;
}

ImageBuffer theoretical_steady_state(const ImageBuffer& f,
                                     const ImageBuffer& v) {
  Require(f.shape() == v.shape(), ErrorCode::kShapeMismatch,
          "initial and guidance images differ in shape");
  RequirePositive(v, "guidance image");
  const std::vector<double> mf = mean_value(f);
  const std::vector<double> mv = mean_value(v);
  ImageBuffer w = v;
  const std::size_t nc = v.channels();
  auto data = w.data();
  for (std::size_t k = 0; k < data.size(); ++k) {
    data[k] *= mf[k % nc] / mv[k % nc];
  }
  return w;
}

double relative_entropy(const ImageBuffer& u, const ImageBuffer& w, double h) {
  Require(u.shape() == w.shape(), ErrorCode::kShapeMismatch,
          "relative entropy needs equally shaped images");
  RequirePositive(u, "relative entropy argument u");
  RequirePositive(w, "relative entropy reference w");
  const auto ud = u.data();
  const auto wd = w.data();
  double divergence = 0.0;
  double excess = 0.0;
  for (std::size_t k = 0; k < ud.size(); ++k) {
    const double diff = ud[k] - wd[k];
    divergence += wd[k] * Phi(diff / wd[k]);
    excess += diff;
  }
  return -h * h * (divergence + excess);
}

}  // namespace difflab::osmosis
