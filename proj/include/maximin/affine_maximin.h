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

#ifndef MAXIMIN_AFFINE_MAXIMIN_H_
#define MAXIMIN_AFFINE_MAXIMIN_H_

#include <Eigen/Core>

#include "maximin/instance.h"

namespace maximin {

// maximize F(x) = min_i (offsets_i + slopes.col(i)^T x) over the unit ball or
// the box [-1, 1]^n.
//
// Both convex relaxations and the linearized steps of the local search in the
// oracle reduce to this form. For simplex weights lambda,
//
//   U(lambda) = sum_i lambda_i offsets_i + ||slopes * lambda||_*
//
// bounds F from above on the whole region (||.||_* is the l2 norm for the ball
// and the l1 norm for the box: the closed-form maximum of a linear function).
struct AffineMaximinProblem {
  Geometry region = Geometry::kBall;
  Eigen::VectorXd offsets;  // m
  Eigen::MatrixXd slopes;   // n x m
};

struct AffineMaximinOptions {
  // Absolute target for upper_bound - value.
  double tol = 1e-9;
  int max_newton_steps = 2000;
};

struct AffineMaximinSolution {
  Eigen::VectorXd x;
  double value = 0.0;  // F(x)
  // Simplex weights with U(multipliers) <= upper_bound.
  Eigen::VectorXd multipliers;
  double upper_bound = 0.0;
  int iterations = 0;
  bool converged = false;

  double gap() const { return upper_bound - value; }
};

double AffineMin(const AffineMaximinProblem& problem, const Eigen::VectorXd& x);
double DualBound(const AffineMaximinProblem& problem,
                 const Eigen::VectorXd& multipliers);

// Log-barrier path following on (x, zeta) with damped Newton steps. The
// returned pair is certified: value <= max F <= upper_bound. A single piece
// (m = 1) is solved in closed form.
AffineMaximinSolution MaximizeAffineMin(const AffineMaximinProblem& problem,
                                        const AffineMaximinOptions& options = {});

}  // namespace maximin

#endif  // MAXIMIN_AFFINE_MAXIMIN_H_
