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


#include "maximin/simplex.h"

#include <random>

#include <Eigen/LU>

#include <gtest/gtest.h>

namespace maximin {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST(SolveLp, TextbookTwoVariable) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), value 36.
  MatrixXd a(3, 2);
  a << 1, 0, 0, 2, 3, 2;
  const VectorXd b = (VectorXd(3) << 4, 12, 18).finished();
  const VectorXd c = (VectorXd(2) << 3, 5).finished();
  const auto r = SolveLp(a, b, c);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 36.0, 1e-12);
  EXPECT_NEAR(r.x(0), 2.0, 1e-12);
  EXPECT_NEAR(r.x(1), 6.0, 1e-12);
}

TEST(SolveLp, Unbounded) {
  MatrixXd a(1, 2);
  a << 1, -1;
  const auto r = SolveLp(a, VectorXd::Ones(1), VectorXd::Ones(2));
  EXPECT_EQ(r.status, LpStatus::kUnbounded);
}

TEST(SolveLp, DegenerateOriginOptimal) {
  MatrixXd a(2, 2);
  a << 1, 1, -1, 1;
  const auto r = SolveLp(a, VectorXd::Zero(2), (VectorXd(2) << -1, 1).finished());
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.value, 0.0, 1e-14);
}

TEST(SolveLp, RejectsNegativeRhs) {
  EXPECT_THROW(SolveLp(MatrixXd::Ones(1, 1), -VectorXd::Ones(1), VectorXd::Ones(1)),
               std::invalid_argument);
}

// Box-constrained LPs max c^T x, 0 <= x <= u have the closed form sum max(c_j, 0) u_j.
TEST(SolveLp, MatchesSeparableClosedForm) {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 7;
    VectorXd c(n), u(n);
    for (int j = 0; j < n; ++j) {
      c(j) = normal(gen);
      u(j) = std::abs(normal(gen)) + 0.1;
    }
    const auto r = SolveLp(MatrixXd::Identity(n, n), u, c);
    ASSERT_EQ(r.status, LpStatus::kOptimal);
    EXPECT_NEAR(r.value, c.cwiseMax(0.0).dot(u), 1e-10);
    EXPECT_TRUE(((MatrixXd::Identity(n, n) * r.x - u).array() <= 1e-12).all());
  }
}

// Random feasible LPs: the optimum must satisfy the constraints and dominate
// every feasible vertex found by brute force over 2-variable problems.
TEST(SolveLp, TwoVariableVertexEnumeration) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 3 + trial % 4;
    MatrixXd a(m + 2, 2);
    VectorXd b(m + 2);
    for (int i = 0; i < m; ++i) {
      a(i, 0) = u(gen);
      a(i, 1) = u(gen);
      b(i) = 0.1 + std::abs(u(gen));
    }
    a.row(m) << 1, 0;  // keep it bounded
    a.row(m + 1) << 0, 1;
    b(m) = b(m + 1) = 2.0;
    const VectorXd c = (VectorXd(2) << u(gen), u(gen)).finished();
    const auto r = SolveLp(a, b, c);
    ASSERT_EQ(r.status, LpStatus::kOptimal);

    // Vertices: intersections of pairs among the m + 2 rows and x >= 0 axes.
    MatrixXd rows(m + 4, 2);
    VectorXd rhs(m + 4);
    rows.topRows(m + 2) = a;
    rhs.head(m + 2) = b;
    rows.row(m + 2) << -1, 0;
    rows.row(m + 3) << 0, -1;
    rhs(m + 2) = rhs(m + 3) = 0.0;
    double best = -1e300;
    for (int p = 0; p < m + 4; ++p) {
      for (int q = p + 1; q < m + 4; ++q) {
        Eigen::Matrix2d k;
        k << rows.row(p), rows.row(q);
        if (std::abs(k.determinant()) < 1e-12) continue;
        const Eigen::Vector2d v = k.inverse() * (Eigen::Vector2d(rhs(p), rhs(q)));
        if (((rows * v - rhs).array() <= 1e-10).all()) best = std::max(best, c.dot(v));
      }
    }
    EXPECT_NEAR(r.value, best, 1e-9);
  }
}

}  // namespace
}  // namespace maximin
