// Copyright 2026 The Maximin Authors
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

#include "maximin/exact.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/QR>

#include "maximin/simplex.h"

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Unit-normalized nonzero points, one per column.
MatrixXd NormalizedPoints(const DispersionInstance& inst) {
  std::vector<int> keep;
  for (int i = 0; i < inst.size(); ++i) {
    if (inst.point(i).norm() > 0.0) keep.push_back(i);
  }
  MatrixXd out(inst.dim(), static_cast<int>(keep.size()));
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
    out.col(k) = inst.point(keep[k]).normalized();
  }
  return out;
}

VectorXd ComplementDirection(const MatrixXd& pts) {
  const int n = static_cast<int>(pts.rows());
  const int k = static_cast<int>(pts.cols());
  VectorXd hat;
  if (k <= 1) {
    hat = VectorXd::Unit(n, 0);
  } else {
    // Last column of the full Q spans part of the orthogonal complement of
    // the first k-1 points (k-1 < n).
    Eigen::HouseholderQR<MatrixXd> qr(pts.leftCols(k - 1));
    const MatrixXd q = qr.householderQ() * MatrixXd::Identity(n, n);
    hat = q.col(n - 1);
  }
  if (k >= 1) {
    if (pts.col(k - 1).dot(hat) > 0.0) hat = -hat;
  }
  return hat.normalized();
}

std::optional<VectorXd> DirectionByLp(const MatrixXd& pts) {
  const int n = static_cast<int>(pts.rows());
  const int k = static_cast<int>(pts.cols());
  // d = p - q with p, q in [0, 1]^n: rows  X^T p - X^T q <= 0, p <= 1, q <= 1.
  MatrixXd a = MatrixXd::Zero(k + 2 * n, 2 * n);
  a.topLeftCorner(k, n) = pts.transpose();
  a.topRightCorner(k, n) = -pts.transpose();
  a.bottomRows(2 * n).setIdentity();
  VectorXd b = VectorXd::Zero(k + 2 * n);
  b.tail(2 * n).setOnes();

  for (int j = 0; j < n; ++j) {
    for (double sign : {1.0, -1.0}) {
      VectorXd c = VectorXd::Zero(2 * n);
      c(j) = sign;
      c(n + j) = -sign;
      const LpResult lp = SolveLp(a, b, c);
      if (lp.status != LpStatus::kOptimal || lp.value <= kSignZeroThreshold) continue;
      const VectorXd d = lp.x.head(n) - lp.x.tail(n);
      if (d.norm() > kSignZeroThreshold) return VectorXd(d.normalized());
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VectorXd> FindSignDirection(const DispersionInstance& inst) {
  if (inst.geometry() != Geometry::kBall) {
    throw std::invalid_argument("sign direction is defined for ball instances");
  }
  const MatrixXd pts = NormalizedPoints(inst);
  if (pts.cols() <= inst.dim()) return ComplementDirection(pts);
  return DirectionByLp(pts);
}

double BoundaryStep(const VectorXd& x, const VectorXd& d) {
  const double dd = d.squaredNorm();
  if (!(dd > 0.0)) throw std::invalid_argument("zero direction");
  const double xd = x.dot(d);
  const double radicand = dd * std::max(0.0, 1.0 - x.squaredNorm()) + xd * xd;
  return (-xd + std::sqrt(radicand)) / dd;
}

std::optional<ExactResult> SolveExact(const DispersionInstance& inst, double tol) {
  std::optional<VectorXd> direction = FindSignDirection(inst);
  if (!direction) return std::nullopt;

  ExactResult result;
  result.relaxation = SolveCrBall(inst, tol);
  result.certificate = *std::move(direction);
  result.alpha = BoundaryStep(result.relaxation.x_star, result.certificate);
  result.x_opt = result.relaxation.x_star + result.alpha * result.certificate;
  result.value = Objective(inst, result.x_opt);
  return result;
}

}  // namespace maximin
