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

#include "maximin/affine_maximin.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double DualNorm(Geometry region, const VectorXd& v) {
  return region == Geometry::kBall ? v.norm() : v.lpNorm<1>();
}

// Maximizer of v^T x over the region.
VectorXd SupportPoint(Geometry region, const VectorXd& v) {
  if (region == Geometry::kBall) {
    const double norm = v.norm();
    return norm > 0.0 ? VectorXd(v / norm) : VectorXd::Zero(v.size());
  }
  return v.unaryExpr([](double c) { return c > 0.0 ? 1.0 : (c < 0.0 ? -1.0 : 0.0); });
}

class BarrierSolver {
 public:
  BarrierSolver(const AffineMaximinProblem& problem)
      : p_(problem),
        n_(static_cast<int>(problem.slopes.rows())),
        m_(static_cast<int>(problem.slopes.cols())) {}

  AffineMaximinSolution Solve(const AffineMaximinOptions& options);

 private:
  void Crossover(const VectorXd& x, const VectorXd& s, double slack_cut,
                 AffineMaximinSolution& best) const;

  // Slacks offsets + slopes^T x - zeta; empty optional semantics via bool.
  bool Slacks(const VectorXd& x, double zeta, VectorXd& s) const {
    s = p_.offsets + p_.slopes.transpose() * x;
    s.array() -= zeta;
    return (s.array() > 0.0).all();
  }

  bool Interior(const VectorXd& x) const {
    if (p_.region == Geometry::kBall) return x.squaredNorm() < 1.0;
    return (x.array().abs() < 1.0).all();
  }

  double RegionBarrier(const VectorXd& x) const {
    if (p_.region == Geometry::kBall) return -std::log1p(-x.squaredNorm());
    double b = 0.0;
    for (int j = 0; j < n_; ++j) b -= std::log1p(-x(j)) + std::log1p(x(j));
    return b;
  }

  // Barrier objective -t*zeta - sum log s_i + region barrier; +inf outside.
  double Merit(const VectorXd& x, double zeta, double t) const {
    VectorXd s;
    if (!Interior(x) || !Slacks(x, zeta, s)) return kInf;
    return -t * zeta - s.array().log().sum() + RegionBarrier(x);
  }

  // Largest step in (0, 1] keeping (x + a dx, zeta + a dzeta) interior,
  // shortened by a fraction-to-boundary factor.
  double MaxStep(const VectorXd& x, const VectorXd& s, const VectorXd& dx,
                 double dzeta) const {
    double a = 1.0;
    const VectorXd ds = p_.slopes.transpose() * dx - VectorXd::Constant(m_, dzeta);
    for (int i = 0; i < m_; ++i) {
      if (ds(i) < 0.0) a = std::min(a, -s(i) / ds(i));
    }
    if (p_.region == Geometry::kBall) {
      // ||x + a dx||^2 = 1 has a positive root when dx != 0.
      const double qa = dx.squaredNorm();
      if (qa > 0.0) {
        const double qb = x.dot(dx);
        const double qc = x.squaredNorm() - 1.0;
        const double root = (-qb + std::sqrt(qb * qb - qa * qc)) / qa;
        a = std::min(a, root);
      }
    } else {
      for (int j = 0; j < n_; ++j) {
        if (dx(j) > 0.0) a = std::min(a, (1.0 - x(j)) / dx(j));
        if (dx(j) < 0.0) a = std::min(a, (-1.0 - x(j)) / dx(j));
      }
    }
    return std::min(1.0, 0.99 * a);
  }

  const AffineMaximinProblem& p_;
  int n_;
  int m_;
};

AffineMaximinSolution BarrierSolver::Solve(const AffineMaximinOptions& options) {
  AffineMaximinSolution best;
  best.x = VectorXd::Zero(n_);
  best.value = AffineMin(p_, best.x);
  {
    int k = 0;
    (p_.offsets).minCoeff(&k);
    best.multipliers = VectorXd::Unit(m_, k);
    best.upper_bound = DualBound(p_, best.multipliers);
  }
  if (best.gap() <= options.tol) {
    best.converged = true;
    return best;
  }

  const double nu = m_ + (p_.region == Geometry::kBall ? 2.0 : 2.0 * n_);
  VectorXd x = VectorXd::Zero(n_);
  double zeta = best.value - std::max(1.0, std::abs(best.value));
  double t = nu / std::max(best.gap(), 1e-12);

  VectorXd s(m_);
  MatrixXd hessian(n_ + 1, n_ + 1);
  VectorXd grad(n_ + 1);
  int steps = 0;
  int stalled_rounds = 0;

  while (steps < options.max_newton_steps) {
    const double gap_before = best.gap();
    // Centering for the current t.
    for (int inner = 0; inner < 100 && steps < options.max_newton_steps;
         ++inner, ++steps) {
      Slacks(x, zeta, s);
      const VectorXd inv_s = s.cwiseInverse();
      const VectorXd inv_s2 = inv_s.cwiseAbs2();

      grad.head(n_) = -p_.slopes * inv_s;
      grad(n_) = -t + inv_s.sum();
      hessian.topLeftCorner(n_, n_) =
          p_.slopes * inv_s2.asDiagonal() * p_.slopes.transpose();
      hessian.topRightCorner(n_, 1) = -p_.slopes * inv_s2;
      hessian.bottomLeftCorner(1, n_) = hessian.topRightCorner(n_, 1).transpose();
      hessian(n_, n_) = inv_s2.sum();
      if (p_.region == Geometry::kBall) {
        const double r = 1.0 - x.squaredNorm();
        grad.head(n_) += 2.0 * x / r;
        hessian.topLeftCorner(n_, n_) += (2.0 / r) * MatrixXd::Identity(n_, n_) +
                                         (4.0 / (r * r)) * x * x.transpose();
      } else {
        for (int j = 0; j < n_; ++j) {
          const double up = 1.0 - x(j), down = 1.0 + x(j);
          grad(j) += 1.0 / up - 1.0 / down;
          hessian(j, j) += 1.0 / (up * up) + 1.0 / (down * down);
        }
      }

      const VectorXd step = hessian.ldlt().solve(-grad);
      if (!step.allFinite()) break;
      const double decrement = -grad.dot(step);
      if (decrement / 2.0 <= 1e-10) break;

      const VectorXd dx = step.head(n_);
      const double dzeta = step(n_);
      double a = MaxStep(x, s, dx, dzeta);
      const double merit = Merit(x, zeta, t);
      // Armijo backtracking.
      while (a > 1e-14 &&
             Merit(x + a * dx, zeta + a * dzeta, t) > merit - 0.25 * a * decrement) {
        a *= 0.5;
      }
      if (a <= 1e-14) break;
      x += a * dx;
      zeta += a * dzeta;
    }

    Slacks(x, zeta, s);
    for (double cut : {1e-8, 1e-6, 1e-4}) {
      if (best.gap() <= options.tol) break;
      Crossover(x, s, cut, best);
    }
    VectorXd lambda = (1.0 / t) * s.cwiseInverse();
    lambda /= lambda.sum();
    const double upper = DualBound(p_, lambda);
    const double value = AffineMin(p_, x);
    bool improved = best.gap() < gap_before;
    if (upper < best.upper_bound) {
      best.upper_bound = upper;
      best.multipliers = lambda;
      improved = true;
    }
    if (value > best.value) {
      best.value = value;
      best.x = x;
      improved = true;
    }
    if (best.gap() <= options.tol) {
      best.converged = true;
      break;
    }
    stalled_rounds = improved ? 0 : stalled_rounds + 1;
    if (stalled_rounds >= 4 || t > 1e18) break;
    t *= 8.0;
  }
  best.iterations = steps;
  return best;
}

// Newton on the optimality system restricted to the pieces with relative
// slack below `slack_cut` and the region faces within the same distance:
//   sum_i l_i g_i = sum_k mu_k grad h_k(x),  sum_i l_i = 1,
//   c_i + g_i^T x = zeta (i active),  h_k(x) = 0 (k active).
// The resulting point (projected onto the region) and the clipped
// multipliers are kept whenever they tighten the primal or dual side.
void BarrierSolver::Crossover(const VectorXd& x0, const VectorXd& s0, double slack_cut,
                              AffineMaximinSolution& best) const {
  const double scale = std::max(1.0, s0.maxCoeff());
  std::vector<int> active;
  for (int i = 0; i < m_; ++i) {
    if (s0(i) <= slack_cut * scale) active.push_back(i);
  }
  std::vector<int> faces;  // -1: sphere; j >= 0: box face of coordinate j
  if (p_.region == Geometry::kBall) {
    if (1.0 - x0.squaredNorm() <= slack_cut) faces.push_back(-1);
  } else {
    for (int j = 0; j < n_; ++j) {
      if (1.0 - std::abs(x0(j)) <= slack_cut) faces.push_back(j);
    }
  }
  const int a = static_cast<int>(active.size());
  const int b = static_cast<int>(faces.size());
  if (a == 0 || a > 4 * (n_ + 1) + 8) return;
  const int dim = n_ + 1 + a + b;

  VectorXd x = x0;
  double zeta = (p_.offsets + p_.slopes.transpose() * x0).minCoeff();
  VectorXd lambda(a);
  for (int k = 0; k < a; ++k) lambda(k) = 1.0 / s0(active[k]);
  lambda /= lambda.sum();
  VectorXd mu = VectorXd::Zero(b);

  const int newton_steps = p_.region == Geometry::kBall && b > 0 ? 12 : 1;
  for (int iter = 0; iter < newton_steps; ++iter) {
    MatrixXd jac = MatrixXd::Zero(dim, dim);
    VectorXd residual(dim);
    VectorXd stationarity = VectorXd::Zero(n_);
    for (int k = 0; k < a; ++k) {
      const int i = active[k];
      stationarity += lambda(k) * p_.slopes.col(i);
      jac.block(0, n_ + 1 + k, n_, 1) = p_.slopes.col(i);
      jac.block(n_ + 1 + k, 0, 1, n_) = p_.slopes.col(i).transpose();
      jac(n_ + 1 + k, n_) = -1.0;
      residual(n_ + 1 + k) = p_.offsets(i) + p_.slopes.col(i).dot(x) - zeta;
    }
    for (int k = 0; k < b; ++k) {
      VectorXd grad = VectorXd::Zero(n_);
      if (faces[k] < 0) {
        grad = 2.0 * x;
        jac.topLeftCorner(n_, n_).diagonal().array() -= 2.0 * mu(k);
        residual(n_ + 1 + a + k) = x.squaredNorm() - 1.0;
      } else {
        const int j = faces[k];
        const double side = x0(j) < 0.0 ? -1.0 : 1.0;
        grad(j) = side;
        residual(n_ + 1 + a + k) = side * x(j) - 1.0;
      }
      stationarity -= mu(k) * grad;
      jac.block(0, n_ + 1 + a + k, n_, 1) = -grad;
      jac.block(n_ + 1 + a + k, 0, 1, n_) = grad.transpose();
    }
    residual.head(n_) = stationarity;
    residual(n_) = 1.0 - lambda.sum();
    jac.block(n_, n_ + 1, 1, a).setConstant(-1.0);

    const VectorXd step = jac.completeOrthogonalDecomposition().solve(-residual);
    if (!step.allFinite()) return;
    x += step.head(n_);
    zeta += step(n_);
    lambda += step.segment(n_ + 1, a);
    mu += step.tail(b);
    if (step.lpNorm<Eigen::Infinity>() <= 1e-15) break;
  }

  if (p_.region == Geometry::kBall) {
    const double norm = x.norm();
    if (norm > 1.0) x /= norm;
  } else {
    x = x.cwiseMax(-1.0).cwiseMin(1.0);
  }
  const double value = AffineMin(p_, x);
  if (value > best.value) {
    best.value = value;
    best.x = x;
  }
  VectorXd full = VectorXd::Zero(m_);
  for (int k = 0; k < a; ++k) full(active[k]) = std::max(lambda(k), 0.0);
  if (full.sum() > 0.0) {
    full /= full.sum();
    const double upper = DualBound(p_, full);
    if (upper < best.upper_bound) {
      best.upper_bound = upper;
      best.multipliers = full;
    }
  }
}

}  // namespace

double AffineMin(const AffineMaximinProblem& problem, const VectorXd& x) {
  return (problem.offsets + problem.slopes.transpose() * x).minCoeff();
}

double DualBound(const AffineMaximinProblem& problem, const VectorXd& multipliers) {
  return problem.offsets.dot(multipliers) +
         DualNorm(problem.region, problem.slopes * multipliers);
}

AffineMaximinSolution MaximizeAffineMin(const AffineMaximinProblem& problem,
                                        const AffineMaximinOptions& options) {
  const auto n = problem.slopes.rows();
  const auto m = problem.slopes.cols();
  if (n < 1 || m < 1 || problem.offsets.size() != m) {
    throw std::invalid_argument("affine maximin: inconsistent problem shape");
  }
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");

  if (m == 1) {
    AffineMaximinSolution sol;
    sol.x = SupportPoint(problem.region, problem.slopes.col(0));
    sol.value = AffineMin(problem, sol.x);
    sol.multipliers = VectorXd::Ones(1);
    sol.upper_bound = DualBound(problem, sol.multipliers);
    // Rounding can leave U a hair below F; the exact gap is zero.
    sol.upper_bound = std::max(sol.upper_bound, sol.value);
    sol.converged = true;
    return sol;
  }
  AffineMaximinSolution sol = BarrierSolver(problem).Solve(options);
  // Weak duality makes U >= F; a last-ulp inversion is rounding.
  sol.upper_bound = std::max(sol.upper_bound, sol.value);
  return sol;
}

}  // namespace maximin
