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

#include "maximin/relax.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "maximin/error.h"

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double RelaxedObjective(const DispersionInstance& inst, const VectorXd& x) {
  if (x.size() != inst.dim()) throw std::invalid_argument("dimension mismatch");
  const double mu = inst.mu();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.size(); ++i) {
    const auto p = inst.point(i);
    best = std::min(best, inst.weight(i) * (mu - 2.0 * p.dot(x) + p.squaredNorm()));
  }
  return best;
}

AffineMaximinProblem RelaxationProblem(const DispersionInstance& inst) {
  AffineMaximinProblem problem;
  problem.region = inst.geometry();
  problem.offsets.resize(inst.size());
  problem.slopes.resize(inst.dim(), inst.size());
  for (int i = 0; i < inst.size(); ++i) {
    problem.offsets(i) = inst.weight(i) * (inst.mu() + inst.point(i).squaredNorm());
    problem.slopes.col(i) = -2.0 * inst.weight(i) * inst.point(i);
  }
  return problem;
}

double RelaxationDualBound(const DispersionInstance& inst, const VectorXd& multipliers) {
  return DualBound(RelaxationProblem(inst), multipliers);
}

namespace {

RelaxationResult Solve(const DispersionInstance& inst, double tol) {
  const AffineMaximinProblem problem = RelaxationProblem(inst);
  if (tol <= 0.0) {
    double u0 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < inst.size(); ++i) {
      u0 = std::min(u0, DualBound(problem, VectorXd::Unit(inst.size(), i)));
    }
    tol = 1e-7 * std::max(1.0, u0);
  }
  AffineMaximinOptions options;
  options.tol = tol;
  const AffineMaximinSolution sol = MaximizeAffineMin(problem, options);

  RelaxationResult result;
  result.x_star = sol.x;
  result.zeta_star = RelaxedObjective(inst, sol.x);
  result.gap = std::max(0.0, sol.upper_bound - result.zeta_star);
  result.multipliers = sol.multipliers;
  result.iterations = sol.iterations;
  result.converged = result.gap <= tol;
  return result;
}

void RequireGeometry(const DispersionInstance& inst, Geometry geometry) {
  if (inst.geometry() != geometry) {
    throw std::invalid_argument(std::string("expected a ") +
                                std::string(GeometryName(geometry)) + " instance");
  }
}

MatrixXd OuterPart(const RelaxationResult& result) {
  const int n = static_cast<int>(result.x_star.size());
  VectorXd v(n + 1);
  v << result.x_star, 1.0;
  return v * v.transpose();
}

void RequirePositive(const RelaxationResult& result) {
  if (!(result.zeta_star > 0.0)) {
    throw NonPositiveRelaxationError(
        "relaxation value " + std::to_string(result.zeta_star) +
        " is not positive; every feasible point is an input point");
  }
}

}  // namespace

RelaxationResult SolveCrBall(const DispersionInstance& inst, double tol) {
  RequireGeometry(inst, Geometry::kBall);
  return Solve(inst, tol);
}

RelaxationResult SolveCrBox(const DispersionInstance& inst, double tol) {
  RequireGeometry(inst, Geometry::kBox);
  return Solve(inst, tol);
}

RelaxationResult SolveRelaxation(const DispersionInstance& inst, double tol) {
  return Solve(inst, tol);
}

LiftedMatrix::LiftedMatrix(MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 2) {
    throw std::invalid_argument("lifted matrix must be square of order >= 2");
  }
}

LiftedMatrix LiftBox(const RelaxationResult& result, const DispersionInstance& inst) {
  RequireGeometry(inst, Geometry::kBox);
  RequirePositive(result);
  const int n = inst.dim();
  MatrixXd z = OuterPart(result);
  for (int j = 0; j < n; ++j) z(j, j) += 1.0 - result.x_star(j) * result.x_star(j);
  return LiftedMatrix(z / result.zeta_star);
}

LiftedMatrix LiftBall(const RelaxationResult& result, const DispersionInstance& inst) {
  RequireGeometry(inst, Geometry::kBall);
  RequirePositive(result);
  const int n = inst.dim();
  MatrixXd z = OuterPart(result);
  const double fill = (1.0 - result.x_star.squaredNorm()) / n;
  z.topLeftCorner(n, n).diagonal().array() += fill;
  return LiftedMatrix(z / result.zeta_star);
}

LiftedMatrix Lift(const RelaxationResult& result, const DispersionInstance& inst) {
  return inst.geometry() == Geometry::kBall ? LiftBall(result, inst)
                                            : LiftBox(result, inst);
}

double Gamma1(const LiftedMatrix& z) {
  const auto diag = z.entries().diagonal().head(z.dim());
  const double trace = diag.sum();
  if (!(trace > 0.0)) throw std::invalid_argument("gamma1: zero trace");
  return diag.maxCoeff() / trace;
}

LiftDiagnostics Diagnose(const LiftedMatrix& z, const DispersionInstance& inst) {
  const int n = z.dim();
  if (n != inst.dim()) throw std::invalid_argument("dimension mismatch");
  const MatrixXd& e = z.entries();
  LiftDiagnostics d;
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(e, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = eig.eigenvalues().minCoeff();
  d.spectral_norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  const auto diag = e.diagonal().head(n);
  if (inst.geometry() == Geometry::kBall) {
    d.cone_residual = std::abs(diag.sum() - z.corner());
  } else {
    d.cone_residual = (diag.array() - z.corner()).abs().maxCoeff();
  }
  const double top_trace = diag.sum();
  d.min_weighted_trace = std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.size(); ++i) {
    const auto p = inst.point(i);
    const double tr = top_trace - 2.0 * p.dot(e.col(n).head(n)) +
                      p.squaredNorm() * z.corner();
    d.min_weighted_trace = std::min(d.min_weighted_trace, inst.weight(i) * tr);
  }
  return d;
}

}  // namespace maximin
