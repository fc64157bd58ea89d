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

#include "maximin/oracle.h"

#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include "maximin/affine_maximin.h"
#include "maximin/error.h"
#include "maximin/hardness.h"
#include "maximin/tail.h"

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

class RegionSampler {
 public:
  // The stream depends on the instance only, so a smaller budget always
  // sees a prefix of the samples of a larger one.
  explicit RegionSampler(const DispersionInstance& inst)
      : geometry_(inst.geometry()), n_(inst.dim()) {
    // Small boxes: enumerate every corner first.
    if (geometry_ == Geometry::kBox && n_ <= 12) corner_count_ = std::int64_t{1} << n_;
  }

  VectorXd Next(std::int64_t index, Rng& rng) const {
    if (geometry_ == Geometry::kBall) {
      VectorXd dir = SampleSphere(n_, rng);
      if (index % 2 == 0) return dir;
      return dir * std::pow(rng.Uniform(0.0, 1.0), 1.0 / n_);
    }
    if (index < corner_count_) {
      VectorXd c(n_);
      for (int j = 0; j < n_; ++j) c(j) = ((index >> j) & 1) ? 1.0 : -1.0;
      return c;
    }
    VectorXd x(n_);
    for (int j = 0; j < n_; ++j) x(j) = rng.Uniform(-1.0, 1.0);
    switch (index % 4) {
      case 0:
        for (int j = 0; j < n_; ++j) x(j) = x(j) < 0.0 ? -1.0 : 1.0;
        break;
      case 1: {
        const int j = static_cast<int>(rng.engine()() % n_);
        x(j) = x(j) < 0.0 ? -1.0 : 1.0;
        break;
      }
      default:
        break;
    }
    return x;
  }

 private:
  Geometry geometry_;
  int n_;
  std::int64_t corner_count_ = 0;
};

// Tangent-plane minorant of f at x: min_i w_i (||x^i||^2 - ||x||^2 + 2 (x - x^i)^T y).
AffineMaximinProblem Minorant(const DispersionInstance& inst, const VectorXd& x) {
  AffineMaximinProblem problem;
  problem.region = inst.geometry();
  problem.offsets.resize(inst.size());
  problem.slopes.resize(inst.dim(), inst.size());
  const double xx = x.squaredNorm();
  for (int i = 0; i < inst.size(); ++i) {
    const auto p = inst.point(i);
    problem.offsets(i) = inst.weight(i) * (p.squaredNorm() - xx);
    problem.slopes.col(i) = 2.0 * inst.weight(i) * (x - p);
  }
  return problem;
}

VectorXd ProjectToRegion(const DispersionInstance& inst, VectorXd x) {
  if (inst.geometry() == Geometry::kBall) {
    const double norm = x.norm();
    if (norm > 1.0) x /= norm;
    return x;
  }
  return x.cwiseMax(-1.0).cwiseMin(1.0);
}

// Active-set Newton on the stationarity system of max zeta s.t. f_i(x) >= zeta
// (i in the active set) and the active region constraints held with
// equality. Returns the best feasible iterate, or x itself if none improves.
VectorXd PolishActiveSet(const DispersionInstance& inst, const VectorXd& x0, double band) {
  const int n = inst.dim();
  const Geometry geometry = inst.geometry();
  VectorXd dist(inst.size());
  for (int i = 0; i < inst.size(); ++i) {
    dist(i) = inst.weight(i) * (x0 - inst.point(i)).squaredNorm();
  }
  const double f0 = dist.minCoeff();
  std::vector<int> active;
  for (int i = 0; i < inst.size(); ++i) {
    if (dist(i) <= f0 + band) active.push_back(i);
  }
  // Region constraints: ball boundary (code -1) or box faces (code j >= 0).
  std::vector<int> faces;
  if (geometry == Geometry::kBall) {
    if (x0.squaredNorm() >= 1.0 - 1e-7) faces.push_back(-1);
  } else {
    for (int j = 0; j < n; ++j) {
      if (std::abs(x0(j)) >= 1.0 - 1e-7) faces.push_back(j);
    }
  }
  const int a = static_cast<int>(active.size());
  const int b = static_cast<int>(faces.size());
  const int dim = n + 1 + a + b;

  VectorXd x = x0;
  double zeta = f0;
  VectorXd lambda = VectorXd::Constant(a, 1.0 / a);
  VectorXd mu = VectorXd::Zero(b);
  VectorXd best = x0;
  double best_value = f0;

  for (int iter = 0; iter < 30; ++iter) {
    VectorXd residual(dim);
    MatrixXd jac = MatrixXd::Zero(dim, dim);
    VectorXd stationarity = VectorXd::Zero(n);
    double curvature = 0.0;
    for (int k = 0; k < a; ++k) {
      const int i = active[k];
      const VectorXd grad = 2.0 * inst.weight(i) * (x - inst.point(i));
      stationarity += lambda(k) * grad;
      curvature += 2.0 * inst.weight(i) * lambda(k);
      jac.block(0, n + 1 + k, n, 1) = grad;
      jac.block(n + 1 + k, 0, 1, n) = grad.transpose();
      jac(n + 1 + k, n) = -1.0;
      residual(n + 1 + k) = inst.weight(i) * (x - inst.point(i)).squaredNorm() - zeta;
    }
    for (int k = 0; k < b; ++k) {
      VectorXd grad = VectorXd::Zero(n);
      if (faces[k] < 0) {
        grad = 2.0 * x;
        curvature -= 2.0 * mu(k);
        residual(n + 1 + a + k) = x.squaredNorm() - 1.0;
      } else {
        const int j = faces[k];
        const double side = x0(j) < 0.0 ? -1.0 : 1.0;
        grad(j) = side;
        residual(n + 1 + a + k) = side * x(j) - 1.0;
      }
      stationarity -= mu(k) * grad;
      jac.block(0, n + 1 + a + k, n, 1) = -grad;
      jac.block(n + 1 + a + k, 0, 1, n) = grad.transpose();
    }
    residual.head(n) = stationarity;
    residual(n) = 1.0 - lambda.sum();
    jac.topLeftCorner(n, n).diagonal().setConstant(curvature);
    jac.block(n, n + 1, 1, a).setConstant(-1.0);

    if (residual.lpNorm<Eigen::Infinity>() < 1e-15) break;
    const VectorXd step = jac.completeOrthogonalDecomposition().solve(-residual);
    if (!step.allFinite()) break;
    x += step.head(n);
    zeta += step(n);
    lambda += step.segment(n + 1, a);
    mu += step.tail(b);

    const VectorXd candidate = ProjectToRegion(inst, x);
    const double value = Objective(inst, candidate);
    if (value > best_value) {
      best_value = value;
      best = candidate;
    }
    if (step.lpNorm<Eigen::Infinity>() < 1e-15) break;
  }
  return best;
}

}  // namespace

VectorXd RefineLocal(const DispersionInstance& inst, const VectorXd& start,
                     const OracleOptions& options, std::int64_t* steps) {
  VectorXd x = ProjectToRegion(inst, start);
  double fx = Objective(inst, x);
  const double scale = std::max(1.0, inst.weights().maxCoeff() *
                                         (1.0 + inst.points().colwise().norm().maxCoeff()));
  AffineMaximinOptions inner;
  inner.tol = 1e-9 * scale * scale;
  int next_polish = 2;
  for (int k = 0; k < options.max_refine_steps; ++k) {
    if (steps) ++*steps;
    const AffineMaximinSolution sol = MaximizeAffineMin(Minorant(inst, x), inner);
    const VectorXd next = ProjectToRegion(inst, sol.x);
    const double fnext = Objective(inst, next);
    if (!(fnext > fx)) break;
    const double moved = (next - x).norm();
    x = next;
    fx = fnext;
    if (moved <= options.step_tol) break;
    if (k + 1 == next_polish) {
      // Once the active pieces are identified the Newton polish lands on the
      // local maximizer; a minorize-maximize step from there cannot move.
      next_polish *= 2;
      const VectorXd polished = PolishActiveSet(inst, x, 1e-6 * scale * scale);
      const double fp = Objective(inst, polished);
      if (fp > fx) {
        x = polished;
        fx = fp;
      }
    }
  }
  for (double band : {1e-9, 1e-6, 1e-3}) {
    const VectorXd polished = PolishActiveSet(inst, x, band * scale * scale);
    const double fp = Objective(inst, polished);
    if (fp > fx) {
      x = polished;
      fx = fp;
    }
  }
  return x;
}

OracleResult SolveGlobal(const DispersionInstance& inst, Rng& rng,
                         const OracleOptions& options) {
  if (options.budget < 1 || options.top_k < 1) {
    throw std::invalid_argument("oracle budget and top_k must be positive");
  }
  OracleResult result;
  result.value = -1.0;
  const RegionSampler sampler(inst);
  // Min-heap holding the values of the best top_k samples so far.
  std::priority_queue<double, std::vector<double>, std::greater<>> leaders;
  double best_sampled = -1.0;

  for (std::int64_t s = 0; s < options.budget; ++s) {
    const VectorXd x = sampler.Next(s, rng);
    const double v = Objective(inst, x);
    best_sampled = std::max(best_sampled, v);
    if (static_cast<int>(leaders.size()) < options.top_k || v > leaders.top()) {
      leaders.push(v);
      if (static_cast<int>(leaders.size()) > options.top_k) leaders.pop();
      const VectorXd refined = RefineLocal(inst, x, options, &result.trace.refinement_steps);
      ++result.trace.refinements;
      const double rv = Objective(inst, refined);
      if (rv > result.value) {
        result.value = rv;
        result.x_best = refined;
      }
    }
    if (v > result.value) {
      result.value = v;
      result.x_best = x;
    }
  }
  result.trace.samples = options.budget;
  result.trace.best_sampled = best_sampled;
  result.certified_radius =
      "heuristic: best of " + std::to_string(options.budget) + " samples and " +
      std::to_string(result.trace.refinements) + " local refinements; not a proof";
  return result;
}

double SolveBqpRelaxCheck(const MatrixXd& q, int grid_points) {
  const int n = static_cast<int>(q.rows());
  Eigen::LLT<MatrixXd> llt(q);
  if (q.cols() != n || llt.info() != Eigen::Success) {
    throw std::invalid_argument("SolveBqpRelaxCheck needs a positive definite matrix");
  }
  if (grid_points < 2) throw std::invalid_argument("grid needs >= 2 points per axis");
  const double value = BqpEnumerate(q).value;

  std::vector<int> idx(n, 0);
  VectorXd x(n);
  const double h = 2.0 / (grid_points - 1);
  while (true) {
    for (int j = 0; j < n; ++j) x(j) = -1.0 + h * idx[j];
    const double v = x.dot(q * x);
    if (v > value * (1.0 + 1e-12) + 1e-12) {
      throw MaximinError("grid point beats the hypercube vertices");
    }
    int j = 0;
    while (j < n && ++idx[j] == grid_points) idx[j++] = 0;
    if (j == n) break;
  }
  return value;
}

}  // namespace maximin
