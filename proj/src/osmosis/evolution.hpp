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

#ifndef DIFFLAB_OSMOSIS_EVOLUTION_HPP_
#define DIFFLAB_OSMOSIS_EVOLUTION_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "core/image_buffer.hpp"
#include "linalg/bicgstab.hpp"
#include "osmosis/drift.hpp"
#include "osmosis/operator.hpp"

namespace difflab::osmosis {

struct ImplicitOptions {
  double tol = 1e-9;
  std::size_t max_iter = 10000;
  bool jacobi = false;
};

// Implicit Euler (I - tau A) u_next = u for a fixed operator and step size.
// Each channel is solved by BiCGSTAB started from u, which keeps the residual
// sum, and hence the mean, at zero up to rounding.
class ImplicitStepper {
 public:
  ImplicitStepper(const OsmosisOperator& op, double tau,
                  ImplicitOptions options = {});

  // Throws ErrorCode::kSolver when a channel fails to converge; the message
  // carries the status and the recomputed residual.
  ImageBuffer step(const ImageBuffer& u,
                   std::vector<linalg::SolveReport>* reports = nullptr) const;

  double tau() const { return tau_; }

 private:
  std::size_t width_;
  std::size_t height_;
  double tau_;
  ImplicitOptions options_;
  std::vector<linalg::SparseMatrixCSR> systems_;
};

ImageBuffer implicit_step(const ImageBuffer& u, const OsmosisOperator& op,
                          double tau, const ImplicitOptions& options = {},
                          std::vector<linalg::SolveReport>* reports = nullptr);

struct OsmosisFrame {
  std::size_t step;
  ImageBuffer image;
};

// Called after every step with the new state and the per-channel reports.
using StepObserver = std::function<void(
    std::size_t step, const ImageBuffer& u,
    std::span<const linalg::SolveReport> reports)>;

// Runs implicit steps from f up to the last entry of `record_steps` (strictly
// increasing) and returns the requested frames. Step 0 is f.
std::vector<OsmosisFrame> evolve(const ImageBuffer& f, const DriftField& d,
                                 double tau,
                                 std::span<const std::size_t> record_steps,
                                 const ImplicitOptions& options = {},
                                 const StepObserver& observer = {},
                                 double h = 1.0);

// (mean(f) / mean(v)) v, channel by channel.
ImageBuffer theoretical_steady_state(const ImageBuffer& f,
                                     const ImageBuffer& v);

// L = -h^2 sum_j u_j ln(u_j / w_j), the relative entropy of u w.r.t. w.
// Summed as -h^2 sum_j [w_j phi((u_j - w_j) / w_j) + (u_j - w_j)] with
// phi(r) = (1 + r) log1p(r) - r taken from its series for small r, which is
// the same quantity without the cancellation of the direct form.
double relative_entropy(const ImageBuffer& u, const ImageBuffer& w,
                        double h = 1.0);

}  // namespace difflab::osmosis

#endif  // DIFFLAB_OSMOSIS_EVOLUTION_HPP_
