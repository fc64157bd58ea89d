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

#ifndef MAXIMIN_RELAX_H_
#define MAXIMIN_RELAX_H_

#include <algorithm>

#include <Eigen/Core>

#include "maximin/affine_maximin.h"
#include "maximin/instance.h"

namespace maximin {

// Optimizer of the convex relaxation
//
//   max zeta  s.t.  w_i (mu - 2 (x^i)^T x + ||x^i||^2) >= zeta,  x feasible,
//
// where ||x||^2 has been replaced by its maximum mu over the region (mu = 1 for
// the ball, mu = n for the box). For the ball this is a second-order cone
// program with one cone; for the box it is a linear program.
struct RelaxationResult {
  Eigen::VectorXd x_star;
  // Relaxation objective evaluated at x_star.
  double zeta_star = 0.0;
  // Certified: the relaxation value lies in [zeta_star, zeta_star + gap].
  double gap = 0.0;
  Eigen::VectorXd multipliers;
  int iterations = 0;
  bool converged = false;

  double upper_bound() const { return zeta_star + gap; }
};

// Relaxation objective min_i w_i (mu - 2 (x^i)^T x + ||x^i||^2).
double RelaxedObjective(const DispersionInstance& inst, const Eigen::VectorXd& x);

// sum_i l_i w_i (mu + ||x^i||^2) + max over the region of
// -2 (sum_i l_i w_i x^i)^T x, for simplex weights l.
double RelaxationDualBound(const DispersionInstance& inst,
                           const Eigen::VectorXd& multipliers);

AffineMaximinProblem RelaxationProblem(const DispersionInstance& inst);

// tol <= 0 selects the default 1e-7 * max(1, U0), U0 being the cheapest
// single-point dual bound. Non-convergence is reported through `converged`;
// the returned pair and gap are valid regardless.
RelaxationResult SolveCrBall(const DispersionInstance& inst, double tol = 0.0);
RelaxationResult SolveCrBox(const DispersionInstance& inst, double tol = 0.0);
// Dispatches on the instance geometry.
RelaxationResult SolveRelaxation(const DispersionInstance& inst, double tol = 0.0);

// Symmetric (n+1) x (n+1) matrix feasible for the semidefinite relaxation,
// built from a relaxation optimizer.
class LiftedMatrix {
 public:
  explicit LiftedMatrix(Eigen::MatrixXd entries);

  const Eigen::MatrixXd& entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.rows()) - 1; }
  double corner() const { return entries_(dim(), dim()); }
  double operator()(int r, int c) const { return entries_(r, c); }

 private:
  Eigen::MatrixXd entries_;
};

// Z = (xx^T + Diag(1 - x_1^2, ..., 1 - x_n^2, 0)) / zeta with x = [x*; 1].
// Throws NonPositiveRelaxationError when zeta* <= 0.
LiftedMatrix LiftBox(const RelaxationResult& result, const DispersionInstance& inst);
// Z = (xx^T + blockdiag((1 - ||x*||^2) / n * I, 0)) / zeta with x = [x*; 1].
LiftedMatrix LiftBall(const RelaxationResult& result, const DispersionInstance& inst);
LiftedMatrix Lift(const RelaxationResult& result, const DispersionInstance& inst);

// max_j Z_jj / sum_j Z_jj over the leading n x n block.
double Gamma1(const LiftedMatrix& z);

struct LiftDiagnostics {
  double min_eigenvalue = 0.0;
  double spectral_norm = 0.0;
  // Ball: |sum_j Z_jj - Z_{n+1,n+1}|. Box: max_j |Z_jj - Z_{n+1,n+1}|.
  double cone_residual = 0.0;
  // min_i w_i Tr(A^i Z), A^i = [I, -x^i; -(x^i)^T, ||x^i||^2].
  double min_weighted_trace = 0.0;

  bool Feasible(double tol = 1e-9) const {
    return min_eigenvalue >= -tol * std::max(1.0, spectral_norm) &&
           cone_residual <= tol && min_weighted_trace >= 1.0 - tol;
  }
};

LiftDiagnostics Diagnose(const LiftedMatrix& z, const DispersionInstance& inst);

}  // namespace maximin

#endif  // MAXIMIN_RELAX_H_
