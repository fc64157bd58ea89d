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

#ifndef MAXIMIN_APPROX_H_
#define MAXIMIN_APPROX_H_

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "maximin/instance.h"
#include "maximin/random.h"
#include "maximin/relax.h"

namespace maximin {

struct ApproxOptions {
  // Draws allowed before SampleBudgetExhausted. The rng keeps its position,
  // so calling again with the same rng continues the stream.
  std::int64_t max_draws = 1'000'000;
};

struct ApproxResult {
  Eigen::VectorXd x_tilde;
  double f_value = 0.0;  // Objective(inst, x_tilde)
  std::int64_t raw_samples = 0;  // draws consumed by this call
  std::int64_t accepted_at = 0;  // 1-based index of the accepted draw
  double alpha_used = 0.0;
  // Guaranteed ratio f(x_tilde) / (relaxation value) for the algorithm that
  // produced this result; may be negative (then it says nothing).
  double bound_r = 0.0;
  // Ball sampler: the bound refined by the minimum point norm. Others: bound_r.
  double refined_bound = 0.0;
  // Set by the relaxation-based algorithm only.
  std::optional<double> gamma1;
  std::optional<RelaxationResult> relaxation;
};

// Threshold of the sphere sampler: S^{-1}(n, rho / m). When rho / m >= 1/2 the
// inverse is undefined and 0 is used (acceptance then asks (x^i)^T z < 0).
double BallSamplerAlpha(int n, int m, double rho);
// (1 - alpha / sqrt(n)) / 2.
double BallSamplerBound(int n, int m, double rho);
// (1 - sqrt((20 / (9 n)) ln(m / rho))) / 2, a closed-form lower estimate of
// BallSamplerBound.
double BallSamplerPlainBound(int n, int m, double rho);
// sqrt(2 ln(m / rho)) used by the Rademacher samplers.
double RademacherAlpha(int m, double rho);
// (1 - sqrt(2 ln(m / rho) gamma1)) / 2.
double RelaxationSamplerBound(int m, double rho, double gamma1);

// Sphere sampling for ball instances (n >= 2): draw z uniform on the unit
// sphere until sqrt(n) (x^i)^T z < alpha ||x^i|| for every nonzero x^i and
// return z. No relaxation is solved; f(z) > BallSamplerBound * v(CR_ball).
ApproxResult ApproxBall(const DispersionInstance& inst, double rho, Rng& rng,
                        const ApproxOptions& options = {});

// Relaxation-based Rademacher rounding for either geometry. The semidefinite
// optimum Z* is the lift of the convex relaxation optimizer. Sets
// b^i_j = sqrt(Z*_jj) x^i_j and draws xi in {-1, 1}^n until
// (b^i)^T xi < alpha ||b^i|| for every i with ||b^i|| > 0; returns
// x_j = sqrt(Z*_jj / Z*_{n+1,n+1}) xi_j.
ApproxResult ApproxGeneralFixed(const DispersionInstance& inst, double rho, Rng& rng,
                                const ApproxOptions& options = {});
// Same, reusing an already solved relaxation.
ApproxResult ApproxGeneralFixed(const DispersionInstance& inst,
                                const RelaxationResult& relaxation, double rho,
                                Rng& rng, const ApproxOptions& options = {});

// Box instances: draw xi in {-1, 1}^n until (x^i)^T xi < alpha ||x^i|| for
// every nonzero x^i; returns xi. No relaxation is solved.
ApproxResult ApproxBoxSimplified(const DispersionInstance& inst, double rho, Rng& rng,
                                 const ApproxOptions& options = {});

// nu / (2 + nu) - 2 / (2 + nu) * sqrt((20 / (9 n)) ln(m / rho)), with
// d = min_i ||x^i|| and nu = d + 1/d when d > 1, else 2.
double BoundRefined(const DispersionInstance& inst, double rho);

}  // namespace maximin

#endif  // MAXIMIN_APPROX_H_
