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

#ifndef MAXIMIN_HARDNESS_H_
#define MAXIMIN_HARDNESS_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "maximin/instance.h"
#include "maximin/oracle.h"
#include "maximin/random.h"

namespace maximin {

// Reduction from the partition problem (does a signing of the integers a_i
// sum to zero?) to a ball instance with 2n unit-norm points +-L_i^T.
//
// For t in (0, 1):
//   beta(t)  = (1 - sqrt(1 - t)) / (t sqrt(1 - t)),
//   gamma(t) = 2 beta(t) + t beta(t)^2,
//   Lambda_ii(t) = 1/2 + sqrt(1 + 4 a_i^2 gamma(t)) / 2,
//   g(t) = t - sum_i a_i^2 / Lambda_ii(t).
// At the root t* of g, L = Lambda^{-1/2} (I + beta Lambda^{-1/2} a a^T
// Lambda^{-1/2}) has unit rows and L L^T = (Lambda - a a^T)^{-1}.
double HardnessBeta(double t);
double HardnessGamma(double t);
double HardnessG(std::span<const std::int64_t> a, double t);

struct HardnessArtifact {
  std::vector<std::int64_t> a;
  double t_star = 0.0;
  double beta_val = 0.0;
  double gamma_val = 0.0;
  Eigen::VectorXd lambda_diag;
  Eigen::MatrixXd l;  // rows L_i
  DispersionInstance instance;
  double g_residual = 0.0;  // |g(t*)|

  // (Lambda - a a^T) / 4, the Hessian of the partition-encoding BQP.
  Eigen::MatrixXd BqpMatrix() const;
  double Trace() const { return lambda_diag.sum(); }
};

// Bisects g on [1e-10, 1 - 1e-10] until |g| <= tol (or the bracket reaches
// machine resolution) and assembles the artifact. All a_i must be nonzero.
HardnessArtifact BuildHardness(std::vector<std::int64_t> a, double tol = 1e-13);

struct HardnessIdentities {
  double gamma_identity = 0.0;      // |gamma - (2 beta + t beta^2)|
  double lambda_identity = 0.0;     // max_i |Lambda_ii - (1 + sqrt(1 + 4 a_i^2 gamma)) / 2|
  double row_norm_error = 0.0;      // max_i | ||L_i|| - 1 |
  double sherman_morrison = 0.0;    // max |L L^T (Lambda - a a^T) - I|
  double quadratic_form = 0.0;      // |a^T Lambda^{-1} a - t*|
};

HardnessIdentities CheckIdentities(const HardnessArtifact& artifact);

// Exact max x^T Q x over {-1, 1}^n by Gray-code enumeration of 2^(n-1) sign
// vectors (x and -x agree). n <= 22.
struct BqpSolution {
  double value = 0.0;
  Eigen::VectorXd x;
};
BqpSolution BqpEnumerate(const Eigen::MatrixXd& q);

// 2 - 1/sqrt(v) for v >= 1, else 1: the value of
//   max x^T Q x + s  s.t.  x in [s-1, 1-s]^n, x^T Q x <= 1
// for Q > 0 with v = max over the hypercube of x^T Q x.
double QcqpClosedForm(double v_bqp);
// Independent check of the same value: max over s in [-3, 1] of
// min((1 - s)^2 v, 1) + s on successively refined grids (final step 1e-9).
double QcqpGridOracle(double v_bqp);
// QcqpClosedForm(BqpEnumerate(q).value); q must be positive definite.
double QcqpValue(const Eigen::MatrixXd& q);

// min over signings of (a^T x)^2; zero iff a partition exists.
std::int64_t MinSquaredImbalance(std::span<const std::int64_t> a);
bool PartitionFeasible(std::span<const std::int64_t> a);

struct ReductionReport {
  double oracle_value = 0.0;     // best f found on the emitted instance
  double qcqp_value = 0.0;       // closed-form value from enumeration
  double feasible_value = 0.0;   // 2 - 2 / sqrt(Tr Lambda)
  double v_bqp = 0.0;
  std::int64_t imbalance = 0;    // v_a
  bool partition_feasible = false;
  OracleResult oracle;
};

// Compares the oracle optimum of the emitted instance with the value predicted
// through the quadratic program. Needs n <= 12.
ReductionReport VerifyReduction(const HardnessArtifact& artifact, Rng& rng,
                                const OracleOptions& options = {});

}  // namespace maximin

#endif  // MAXIMIN_HARDNESS_H_
