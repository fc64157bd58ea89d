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

#include "maximin/approx.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "maximin/error.h"
#include "maximin/tail.h"

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

void RequireRho(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
}

// Columns of `vectors` with positive norm, and those norms.
struct ActiveRows {
  MatrixXd vectors;  // n x k
  VectorXd norms;    // k
};

ActiveRows NonzeroColumns(const MatrixXd& vectors) {
  std::vector<int> keep;
  for (int i = 0; i < vectors.cols(); ++i) {
    if (vectors.col(i).norm() > 0.0) keep.push_back(i);
  }
  ActiveRows rows{MatrixXd(vectors.rows(), static_cast<int>(keep.size())),
                  VectorXd(static_cast<int>(keep.size()))};
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
    rows.vectors.col(k) = vectors.col(keep[k]);
    rows.norms(k) = vectors.col(keep[k]).norm();
  }
  return rows;
}

// Draws from `sample` until rows^T draw < threshold * norms componentwise.
template <typename Sampler>
VectorXd RejectionSample(const ActiveRows& rows, const VectorXd& threshold,
                         Sampler&& sample, const ApproxOptions& options,
                         ApproxResult& result) {
  for (std::int64_t draw = 1; draw <= options.max_draws; ++draw) {
    VectorXd z = sample();
    const VectorXd lhs = rows.vectors.transpose() * z;
    if ((lhs.array() < threshold.array()).all()) {
      result.raw_samples = draw;
      result.accepted_at = draw;
      return z;
    }
  }
  throw SampleBudgetExhausted("no draw accepted within " +
                              std::to_string(options.max_draws) +
                              " samples; check rho");
}

}  // namespace

double BallSamplerAlpha(int n, int m, double rho) {
  RequireRho(rho);
  const double beta = rho / m;
  if (beta >= 0.5) return 0.0;
  return TailSInverse(n, beta);
}

double BallSamplerBound(int n, int m, double rho) {
  return 0.5 * (1.0 - BallSamplerAlpha(n, m, rho) / std::sqrt(static_cast<double>(n)));
}

double BallSamplerPlainBound(int n, int m, double rho) {
  RequireRho(rho);
  return 0.5 * (1.0 - std::sqrt(20.0 / (9.0 * n) * std::log(m / rho)));
}

double RademacherAlpha(int m, double rho) {
  RequireRho(rho);
  return std::sqrt(2.0 * std::log(m / rho));
}

double RelaxationSamplerBound(int m, double rho, double gamma1) {
  return 0.5 * (1.0 - std::sqrt(2.0 * std::log(m / rho) * gamma1));
}

ApproxResult ApproxBall(const DispersionInstance& inst, double rho, Rng& rng,
                        const ApproxOptions& options) {
  if (inst.geometry() != Geometry::kBall) {
    throw std::invalid_argument("ApproxBall requires a ball instance");
  }
  const int n = inst.dim();
  if (n < 2) throw std::invalid_argument("ApproxBall requires n >= 2");
  RequireRho(rho);

  ApproxResult result;
  result.alpha_used = BallSamplerAlpha(n, inst.size(), rho);
  result.bound_r = 0.5 * (1.0 - result.alpha_used / std::sqrt(static_cast<double>(n)));
  result.refined_bound = BoundRefined(inst, rho);

  // sqrt(n) (x^i)^T z < alpha ||x^i||  <=>  (x^i)^T z < (alpha / sqrt(n)) ||x^i||.
  const ActiveRows rows = NonzeroColumns(inst.points());
  const VectorXd threshold = (result.alpha_used / std::sqrt(static_cast<double>(n))) * rows.norms;
  result.x_tilde = RejectionSample(rows, threshold, [&] { return SampleSphere(n, rng); },
                                   options, result);
  result.f_value = Objective(inst, result.x_tilde);
  return result;
}

ApproxResult ApproxGeneralFixed(const DispersionInstance& inst,
                                const RelaxationResult& relaxation, double rho,
                                Rng& rng, const ApproxOptions& options) {
  RequireRho(rho);
  const int n = inst.dim();
  const LiftedMatrix z = Lift(relaxation, inst);
  const VectorXd scale = z.entries().diagonal().head(n).cwiseMax(0.0).cwiseSqrt();

  ApproxResult result;
  result.alpha_used = RademacherAlpha(inst.size(), rho);
  result.gamma1 = Gamma1(z);
  result.bound_r = RelaxationSamplerBound(inst.size(), rho, *result.gamma1);
  result.refined_bound = result.bound_r;
  result.relaxation = relaxation;

  // b^i = diag(scale) x^i. Rows with b^i = 0 are dropped: that covers x^i = 0
  // as well as points living only on coordinates where Z*_jj = 0.
  const ActiveRows rows = NonzeroColumns(scale.asDiagonal() * inst.points());
  const VectorXd threshold = result.alpha_used * rows.norms;
  const VectorXd xi = RejectionSample(rows, threshold, [&] { return SampleRademacher(n, rng); },
                                      options, result);
  result.x_tilde = scale.cwiseProduct(xi) / std::sqrt(z.corner());
  result.f_value = Objective(inst, result.x_tilde);
  return result;
}

ApproxResult ApproxGeneralFixed(const DispersionInstance& inst, double rho, Rng& rng,
                                const ApproxOptions& options) {
  return ApproxGeneralFixed(inst, SolveRelaxation(inst), rho, rng, options);
}

ApproxResult ApproxBoxSimplified(const DispersionInstance& inst, double rho, Rng& rng,
                                 const ApproxOptions& options) {
  if (inst.geometry() != Geometry::kBox) {
    throw std::invalid_argument("ApproxBoxSimplified requires a box instance");
  }
  RequireRho(rho);
  const int n = inst.dim();
  ApproxResult result;
  result.alpha_used = RademacherAlpha(inst.size(), rho);
  // gamma1 = 1/n for every box lift.
  result.bound_r = RelaxationSamplerBound(inst.size(), rho, 1.0 / n);
  result.refined_bound = result.bound_r;

  const ActiveRows rows = NonzeroColumns(inst.points());
  const VectorXd threshold = result.alpha_used * rows.norms;
  result.x_tilde = RejectionSample(rows, threshold, [&] { return SampleRademacher(n, rng); },
                                   options, result);
  result.f_value = Objective(inst, result.x_tilde);
  return result;
}

double BoundRefined(const DispersionInstance& inst, double rho) {
  RequireRho(rho);
  const double d = inst.points().colwise().norm().minCoeff();
  const double nu = d > 1.0 ? d + 1.0 / d : 2.0;
  const double root = std::sqrt(20.0 / (9.0 * inst.dim()) * std::log(inst.size() / rho));
  return nu / (2.0 + nu) - 2.0 / (2.0 + nu) * root;
}

}  // namespace maximin
