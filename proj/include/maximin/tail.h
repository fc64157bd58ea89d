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

#ifndef MAXIMIN_TAIL_H_
#define MAXIMIN_TAIL_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "maximin/random.h"

namespace maximin {

// S(n, alpha) = Pr(b^T eta >= alpha ||b||) for eta uniform on the sphere of
// radius sqrt(n) in R^n (any b != 0):
//
//   S(n, alpha) = int_{a}^{1} (1 - t^2)^((n-3)/2) dt / (2 int_0^1 (...) dt),
//   a = alpha / sqrt(n), and 0 once alpha > sqrt(n).
//
// n = 2 uses arccos(a) / pi; n >= 3 uses the regularized incomplete beta
// function, S = I_{1-a^2}((n-1)/2, 1/2) / 2. Requires n >= 2, alpha >= 0.
double TailS(int n, double alpha);

// The alpha in (0, sqrt(n)) with S(n, alpha) = beta, beta in (0, 1/2), by
// bisection on the strictly decreasing S.
double TailSInverse(int n, double beta);

// sqrt((20/9) ln(1/beta)), an upper bound on TailSInverse(n, beta) for all n.
double TailInverseUpperBound(double beta);

// Uniform point on the unit sphere in R^n (normalized Gaussian vector).
Eigen::VectorXd SampleSphere(int n, Rng& rng);

struct TailBoundReport {
  // min over the grid of exp(-0.45 alpha^2) - S(n, alpha).
  double min_margin = 0.0;
  int worst_n = 0;
  double worst_alpha = 0.0;
  int violations = 0;
  int points_checked = 0;
};

// Checks S(n, alpha) < exp(-0.45 alpha^2) for n in [n_min, n_max] and every
// alpha in the grid.
TailBoundReport CheckTailBound(int n_min, int n_max, std::span<const double> alphas);

struct CheckpointLink {
  double from = 0.0;       // x_k
  double to = 0.0;         // x_{k+1}
  double max_tail = 0.0;   // max_n S(n, x_k)
  double bound = 0.0;      // exp(-0.45 x_{k+1}^2)
  bool holds = false;
};

// Piecewise certificate of the tail bound on a finite range of n: with
// m(a) = max_n S(n, a) and q(a) = exp(-0.45 a^2) both decreasing,
// m(x_k) < q(x_{k+1}) on consecutive checkpoints gives m < q on [x_k, x_{k+1}].
std::vector<CheckpointLink> CheckCheckpointChain(std::span<const double> checkpoints,
                                                 int n_min, int n_max);

}  // namespace maximin

#endif  // MAXIMIN_TAIL_H_
