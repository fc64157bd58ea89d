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

#ifndef MAXIMIN_EXACT_H_
#define MAXIMIN_EXACT_H_

#include <optional>

#include <Eigen/Core>

#include "maximin/instance.h"
#include "maximin/relax.h"

namespace maximin {

// Values below this (after normalizing the points) count as zero when
// deciding whether the sign system has a nonzero solution.
inline constexpr double kSignZeroThreshold = 1e-9;

// A unit vector d with (x^i)^T d <= 0 for every point, or nullopt when the
// only solution is d = 0. With at most n nonzero points the direction comes
// from the orthogonal complement of all but one of them; otherwise two linear
// programs per coordinate (max +-d_j over the system intersected with the
// unit box) decide it.
std::optional<Eigen::VectorXd> FindSignDirection(const DispersionInstance& inst);

struct ExactResult {
  Eigen::VectorXd x_opt;  // unit norm
  double value = 0.0;     // f(x_opt)
  Eigen::VectorXd certificate;  // the sign direction
  double alpha = 0.0;           // x_opt = x* + alpha * certificate
  RelaxationResult relaxation;
};

// Globally optimal point of a ball instance whose sign system has a nonzero
// solution: the relaxation optimizer pushed along the sign direction to the
// unit sphere, where the relaxation is tight. nullopt when the sign system
// only has the zero solution.
std::optional<ExactResult> SolveExact(const DispersionInstance& inst, double tol = 0.0);

// Nonnegative step with ||x + alpha d|| = 1 for ||x|| <= 1, d != 0.
double BoundaryStep(const Eigen::VectorXd& x, const Eigen::VectorXd& d);

}  // namespace maximin

#endif  // MAXIMIN_EXACT_H_
