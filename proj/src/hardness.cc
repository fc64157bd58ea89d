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

#include "maximin/hardness.h"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Cholesky>

#include "maximin/error.h"

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double HardnessBeta(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0, 1)");
  // (1 - r) / (t r) with r = sqrt(1 - t), rewritten as 1 / ((1 + r) r) to
  // avoid cancellation near t = 0.
  const double r = std::sqrt(1.0 - t);
  return 1.0 / ((1.0 + r) * r);
}

double HardnessGamma(double t) {
  const double beta = HardnessBeta(t);
  return 2.0 * beta + t * beta * beta;
}

namespace {

double LambdaEntry(std::int64_t a, double gamma) {
  const double a2 = static_cast<double>(a) * static_cast<double>(a);
  return 0.5 + 0.5 * std::sqrt(1.0 + 4.0 * a2 * gamma);
}

void RequireNonzero(std::span<const std::int64_t> a) {
  if (a.empty()) throw std::invalid_argument("empty partition vector");
  for (std::int64_t v : a) {
    if (v == 0) throw std::invalid_argument("partition entries must be nonzero");
  }
}

}  // namespace

double HardnessG(std::span<const std::int64_t> a, double t) {
  RequireNonzero(a);
  const double gamma = HardnessGamma(t);
  double sum = 0.0;
  for (std::int64_t v : a) {
    const double a2 = static_cast<double>(v) * static_cast<double>(v);
    sum += 2.0 * a2 / (1.0 + std::sqrt(1.0 + 4.0 * a2 * gamma));
  }
  return t - sum;
}

MatrixXd HardnessArtifact::BqpMatrix() const {
  VectorXd av(static_cast<int>(a.size()));
  for (int i = 0; i < av.size(); ++i) av(i) = static_cast<double>(a[i]);
  MatrixXd q = MatrixXd(lambda_diag.asDiagonal()) - av * av.transpose();
  return 0.25 * q;
}

HardnessArtifact BuildHardness(std::vector<std::int64_t> a, double tol) {
  RequireNonzero(a);
  double lo = 1e-10, hi = 1.0 - 1e-10;
  double g_lo = HardnessG(a, lo), g_hi = HardnessG(a, hi);
  if (!(g_lo < 0.0 && g_hi > 0.0)) {
    throw MaximinError("g has no sign change on the bisection bracket");
  }
  double t_best = lo, g_best = g_lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = HardnessG(a, mid);
    if (std::abs(g_mid) < std::abs(g_best)) {
      t_best = mid;
      g_best = g_mid;
    }
    if (std::abs(g_mid) <= tol) break;
    (g_mid < 0.0 ? lo : hi) = mid;
  }

  const int n = static_cast<int>(a.size());
  const double beta = HardnessBeta(t_best);
  const double gamma = 2.0 * beta + t_best * beta * beta;
  VectorXd lambda(n);
  VectorXd av(n);
  for (int i = 0; i < n; ++i) {
    lambda(i) = LambdaEntry(a[i], gamma);
    av(i) = static_cast<double>(a[i]);
  }
  const VectorXd d = lambda.cwiseSqrt().cwiseInverse();
  const VectorXd u = d.cwiseProduct(av);
  MatrixXd l = d.asDiagonal() * (MatrixXd::Identity(n, n) + beta * u * u.transpose());

  MatrixXd points(n, 2 * n);
  points.leftCols(n) = l.transpose();
  points.rightCols(n) = -l.transpose();

  return HardnessArtifact{std::move(a),
                          t_best,
                          beta,
                          gamma,
                          std::move(lambda),
                          std::move(l),
                          DispersionInstance(Geometry::kBall, std::move(points)),
                          std::abs(g_best)};
}

HardnessIdentities CheckIdentities(const HardnessArtifact& art) {
  const int n = static_cast<int>(art.a.size());
  VectorXd av(n);
  for (int i = 0; i < n; ++i) av(i) = static_cast<double>(art.a[i]);

  HardnessIdentities id;
  id.gamma_identity = std::abs(art.gamma_val - (2.0 * art.beta_val +
                                                art.t_star * art.beta_val * art.beta_val));
  for (int i = 0; i < n; ++i) {
    id.lambda_identity =
        std::max(id.lambda_identity, std::abs(art.lambda_diag(i) - LambdaEntry(art.a[i], art.gamma_val)));
    id.row_norm_error = std::max(id.row_norm_error, std::abs(art.l.row(i).norm() - 1.0));
  }
  const MatrixXd shifted = MatrixXd(art.lambda_diag.asDiagonal()) - av * av.transpose();
  id.sherman_morrison =
      (art.l * art.l.transpose() * shifted - MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  id.quadratic_form =
      std::abs(av.cwiseAbs2().cwiseQuotient(art.lambda_diag).sum() - art.t_star);
  return id;
}

BqpSolution BqpEnumerate(const MatrixXd& q) {
  const int n = static_cast<int>(q.rows());
  if (q.cols() != n || n < 1) throw std::invalid_argument("BQP matrix must be square");
  if (n > 22) throw std::invalid_argument("BQP enumeration limited to n <= 22");

  VectorXd x = VectorXd::Ones(n);
  VectorXd y = q * x;
  double value = x.dot(y);
  BqpSolution best{value, x};
  // Coordinate 0 stays +1; Gray code over the remaining n-1 coordinates.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < count; ++step) {
    const int k = 1 + std::countr_zero(step);
    const double xk = x(k);
    value += -4.0 * xk * y(k) + 4.0 * q(k, k);
    y -= 2.0 * xk * q.col(k);
    x(k) = -xk;
    if ((step & 0xfff) == 0) {
      y = q * x;
      value = x.dot(y);
    }
    if (value > best.value) {
      best.value = value;
      best.x = x;
    }
  }
  best.value = best.x.dot(q * best.x);
  return best;
}

double QcqpClosedForm(double v_bqp) {
  return v_bqp >= 1.0 ? 2.0 - 1.0 / std::sqrt(v_bqp) : 1.0;
}

double QcqpGridOracle(double v_bqp) {
  auto objective = [v_bqp](double s) {
    return std::min((1.0 - s) * (1.0 - s) * v_bqp, 1.0) + s;
  };
  double lo = -3.0, hi = 1.0, step = 1e-3;
  double best_s = lo, best = -std::numeric_limits<double>::infinity();
  for (int level = 0; level < 3; ++level) {
    const auto count = static_cast<std::int64_t>(std::ceil((hi - lo) / step));
    for (std::int64_t k = 0; k <= count; ++k) {
      const double s = std::min(hi, lo + k * step);
      const double v = objective(s);
      if (v > best) {
        best = v;
        best_s = s;
      }
    }
    lo = std::max(-3.0, best_s - 2.0 * step);
    hi = std::min(1.0, best_s + 2.0 * step);
    step *= 1e-3;
  }
  return best;
}

double QcqpValue(const MatrixXd& q) {
  Eigen::LLT<MatrixXd> llt(q);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("QCQP matrix must be positive definite");
  }
  return QcqpClosedForm(BqpEnumerate(q).value);
}

std::int64_t MinSquaredImbalance(std::span<const std::int64_t> a) {
  const int n = static_cast<int>(a.size());
  if (n < 1 || n > 30) throw std::invalid_argument("partition enumeration limited to n <= 30");
  std::int64_t sum = 0;
  for (std::int64_t v : a) sum += v;
  std::int64_t best = sum * sum;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::int64_t s = sum;
  std::vector<int> sign(n, 1);
  for (std::uint64_t step = 1; step < count; ++step) {
    const int k = 1 + std::countr_zero(step);
    s -= 2 * sign[k] * a[k];
    sign[k] = -sign[k];
    best = std::min(best, s * s);
  }
  return best;
}

bool PartitionFeasible(std::span<const std::int64_t> a) {
  return MinSquaredImbalance(a) == 0;
}

ReductionReport VerifyReduction(const HardnessArtifact& artifact, Rng& rng,
                                const OracleOptions& options) {
  if (artifact.a.size() > 12) throw std::invalid_argument("VerifyReduction needs n <= 12");
  ReductionReport report;
  const MatrixXd q = artifact.BqpMatrix();
  report.v_bqp = BqpEnumerate(q).value;
  report.qcqp_value = QcqpValue(q);
  report.feasible_value = 2.0 - 2.0 / std::sqrt(artifact.Trace());
  report.imbalance = MinSquaredImbalance(artifact.a);
  report.partition_feasible = report.imbalance == 0;
  report.oracle = SolveGlobal(artifact.instance, rng, options);
  report.oracle_value = report.oracle.value;
  return report;
}

}  // namespace maximin
