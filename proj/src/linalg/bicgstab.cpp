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

#include "linalg/bicgstab.hpp"

#include <cmath>

#include "core/error.hpp"

namespace difflab::linalg {

namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

void Residual(const SparseMatrixCSR& a, std::span<const double> x,
              std::span<const double> b, std::span<double> r) {
  matvec(a, x, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged:
      return "converged";
    case SolveStatus::kMaxIter:
      return "max_iter";
    case SolveStatus::kBreakdown:
      return "breakdown";
  }
  return "unknown";
}

double relative_residual(const SparseMatrixCSR& a, std::span<const double> x,
                         std::span<const double> b) {
  std::vector<double> r(a.rows());
  Residual(a, x, b, r);
  const double bnorm = Norm(b);
  return bnorm == 0.0 ? Norm(r) : Norm(r) / bnorm;
}

SolveResult bicgstab(const SparseMatrixCSR& a, std::span<const double> b,
                     std::span<const double> x0, const SolveOptions& options) {
  const std::size_t n = a.rows();
  Require(a.cols() == n, ErrorCode::kShapeMismatch,
          "bicgstab needs a square matrix");
  Require(b.size() == n && x0.size() == n, ErrorCode::kShapeMismatch,
          "bicgstab: right-hand side or initial guess has wrong length");
  Require(options.tol > 0.0, ErrorCode::kInvalidArgument,
          "bicgstab: tolerance must be positive");

  SolveResult result;
  SolveReport& report = result.report;
  const double bnorm = Norm(b);
  if (bnorm == 0.0) {
    result.x.assign(n, 0.0);
    return result;
  }

  std::vector<double> inv_diag;
  if (options.jacobi) {
    inv_diag = a.diagonal();
    for (double& d : inv_diag) d = d != 0.0 ? 1.0 / d : 1.0;
  }
  auto precondition = [&](std::span<const double> in, std::span<double> out) {
    if (inv_diag.empty()) {
      std::copy(in.begin(), in.end(), out.begin());
    } else {
      for (std::size_t i = 0; i < n; ++i) out[i] = inv_diag[i] * in[i];
    }
  };

  std::vector<double>& x = result.x;
  x.assign(x0.begin(), x0.end());
  std::vector<double> r(n), rhat(n), p(n, 0.0), v(n, 0.0), s(n), t(n);
  std::vector<double> phat(n), shat(n);

  Residual(a, x, b, r);
  double rel = Norm(r) / bnorm;
  if (rel <= options.tol) {
    report.final_relative_residual = rel;
    return result;
  }

  rhat = r;
  double rho = 1.0;
  double alpha = 1.0;
  double omega = 1.0;
  bool fresh = true;         // next iteration starts a new Krylov sequence
  bool progressed = false;   // an iteration completed since the last restart

  auto finish = [&](SolveStatus status) {
    Residual(a, x, b, r);
    report.final_relative_residual = Norm(r) / bnorm;
    report.status = status;
    return result;
  };
  // Returns false when the breakdown is terminal.
  auto restart = [&]() {
    if (!progressed) return false;
    ++report.restarts;
    Residual(a, x, b, r);
    rhat = r;
    std::fill(p.begin(), p.end(), 0.0);
    std::fill(v.begin(), v.end(), 0.0);
    rho = alpha = omega = 1.0;
    fresh = true;
    progressed = false;
    return true;
  };

  for (std::size_t k = 1; k <= options.max_iter; ++k) {
    report.iterations = k;
    double rho_new = Dot(rhat, r);
    if (std::fabs(rho_new) < kBreakdownThreshold) {
      if (!restart()) return finish(SolveStatus::kBreakdown);
      rho_new = Dot(rhat, r);
    }
    if (fresh) {
      p = r;
      fresh = false;
    } else {
      const double beta = (rho_new / rho) * (alpha / omega);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = r[i] + beta * (p[i] - omega * v[i]);
      }
    }
    precondition(p, phat);
    matvec(a, phat, v);
    const double denom = Dot(rhat, v);
    if (std::fabs(denom) < kBreakdownThreshold) {
      if (!restart()) return finish(SolveStatus::kBreakdown);
      continue;
    }
    alpha = rho_new / denom;
    for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
    for (std::size_t i = 0; i < n; ++i) x[i] += alpha * phat[i];
    progressed = true;

    if (Norm(s) / bnorm <= options.tol) {
      Residual(a, x, b, r);
      rel = Norm(r) / bnorm;
      if (rel <= options.tol) return finish(SolveStatus::kConverged);
      rho = rho_new;
      fresh = true;
      rhat = r;
      continue;
    }

    precondition(s, shat);
    matvec(a, shat, t);
    const double tt = Dot(t, t);
    omega = tt > 0.0 ? Dot(t, s) / tt : 0.0;
    if (std::fabs(omega) < kBreakdownThreshold) {
      for (std::size_t i = 0; i < n; ++i) r[i] = s[i];
      if (!restart()) return finish(SolveStatus::kBreakdown);
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += omega * shat[i];
      r[i] = s[i] - omega * t[i];
    }
    rho = rho_new;

    if (options.residual_refresh > 0 && k % options.residual_refresh == 0) {
      Residual(a, x, b, r);
    }
    if (Norm(r) / bnorm <= options.tol) {
      Residual(a, x, b, r);
      rel = Norm(r) / bnorm;
      if (rel <= options.tol) return finish(SolveStatus::kConverged);
    }
  }
  return finish(SolveStatus::kMaxIter);
}

}  // namespace difflab::linalg
