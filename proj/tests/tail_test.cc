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


#include "maximin/tail.h"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

namespace maximin {
namespace {

using Eigen::VectorXd;

// Direct quadrature of int_a^1 (1 - t^2)^((n-3)/2) dt / (2 int_0^1 ...).
double QuadratureTail(int n, double alpha) {
  const double a = alpha / std::sqrt(static_cast<double>(n));
  if (a >= 1.0) return 0.0;
  const double p = (n - 3) / 2.0;
  // Write 1 - t^2 = (1 - t)(1 + t) so the endpoint factor keeps full precision
  // from the distance-to-endpoint argument tanh_sinh provides.
  auto f = [p](double t, double to_right) {
    const double one_minus = to_right > 0.0 ? to_right : 1.0 - t;
    return std::pow(one_minus * (1.0 + t), p);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double num = integrator.integrate(f, a, 1.0);
  const double den = integrator.integrate(f, 0.0, 1.0);
  return num / (2.0 * den);
}

TEST(TailS, TwoDimensionalClosedForm) {
  EXPECT_NEAR(TailS(2, 1.0), 0.25, 1e-12);
  for (double alpha = 0.0; alpha < std::sqrt(2.0); alpha += 0.05) {
    EXPECT_NEAR(TailS(2, alpha), std::acos(alpha / std::sqrt(2.0)) / M_PI, 1e-14);
  }
}

TEST(TailS, HalfAtZeroAndZeroBeyondRadius) {
  for (int n = 2; n <= 60; ++n) {
    EXPECT_NEAR(TailS(n, 0.0), 0.5, 1e-14) << n;
    EXPECT_EQ(TailS(n, std::sqrt(static_cast<double>(n)) + 0.1), 0.0) << n;
    EXPECT_EQ(TailS(n, std::sqrt(static_cast<double>(n)) + 1e-12), 0.0) << n;
  }
}

TEST(TailS, MatchesQuadrature) {
  for (int n : {2, 3, 4, 5, 7, 10, 17, 40, 60, 200}) {
    const double root = std::sqrt(static_cast<double>(n));
    for (int k = 0; k <= 40; ++k) {
      const double alpha = root * k / 40.0;
      EXPECT_NEAR(TailS(n, alpha), QuadratureTail(n, alpha), 1e-10) << n << " " << alpha;
    }
  }
}

TEST(TailS, StrictlyDecreasing) {
  for (int n : {2, 3, 8, 40}) {
    const double root = std::sqrt(static_cast<double>(n));
    double prev = TailS(n, 0.0);
    for (int k = 1; k < 1000; ++k) {
      const double cur = TailS(n, root * k / 1000.0);
      EXPECT_LT(cur, prev) << n << " " << k;
      prev = cur;
    }
  }
}

TEST(TailS, RejectsBadArguments) {
  EXPECT_THROW(TailS(1, 0.5), std::invalid_argument);
  EXPECT_THROW(TailS(3, -0.1), std::invalid_argument);
}

TEST(TailSInverse, TwoDimensionalQuarter) {
  EXPECT_NEAR(TailSInverse(2, 0.25), 1.0, 1e-12);
}

TEST(TailSInverse, RoundTrip) {
  for (int n : {2, 5, 40}) {
    for (double beta : {0.01, 0.1, 0.4}) {
      const double alpha = TailSInverse(n, beta);
      EXPECT_GT(alpha, 0.0);
      EXPECT_LT(alpha, std::sqrt(static_cast<double>(n)));
      EXPECT_NEAR(TailS(n, alpha), beta, 1e-10) << n << " " << beta;
    }
  }
}

TEST(TailSInverse, BelowClosedFormUpperBound) {
  for (int n = 2; n <= 80; n += 3) {
    for (double beta : {1e-6, 1e-4, 1e-3, 0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.49}) {
      EXPECT_LT(TailSInverse(n, beta), TailInverseUpperBound(beta)) << n << " " << beta;
    }
  }
}

TEST(TailSInverse, RejectsOutsideOpenInterval) {
  EXPECT_THROW(TailSInverse(3, 0.0), std::invalid_argument);
  EXPECT_THROW(TailSInverse(3, 0.5), std::invalid_argument);
  EXPECT_THROW(TailSInverse(1, 0.2), std::invalid_argument);
}

TEST(SampleSphere, UnitNormAndCenteredMean) {
  Rng rng(17);
  const int n = 6, draws = 1'000'000;
  VectorXd sum = VectorXd::Zero(n);
  for (int k = 0; k < draws; ++k) {
    const VectorXd z = SampleSphere(n, rng);
    ASSERT_NEAR(z.norm(), 1.0, 1e-12);
    sum += z;
  }
  // Each coordinate has variance 1/n.
  for (int j = 0; j < n; ++j) {
    EXPECT_LT(std::abs(sum(j) / draws), 4.0 / std::sqrt(static_cast<double>(draws) * n));
  }
}

TEST(SampleSphere, EmpiricalTailMatches) {
  Rng rng(5);
  const std::pair<int, double> cases[] = {{5, 1.0}, {10, 2.0}, {40, 3.0}};
  for (const auto& [n, alpha] : cases) {
    VectorXd b(n);
    for (int j = 0; j < n; ++j) b(j) = 1.0 + j % 3;
    const int draws = 1'000'000;
    int hits = 0;
    const double root = std::sqrt(static_cast<double>(n));
    for (int k = 0; k < draws; ++k) {
      if (b.dot(root * SampleSphere(n, rng)) >= alpha * b.norm()) ++hits;
    }
    const double p = TailS(n, alpha);
    const double se = std::sqrt(p * (1.0 - p) / draws);
    EXPECT_NEAR(static_cast<double>(hits) / draws, p, 4.0 * se) << n;
  }
}

TEST(Rademacher, TailBelowGaussianBound) {
  Rng rng(6);
  const int n = 12, draws = 200'000;
  VectorXd b(n);
  for (int j = 0; j < n; ++j) b(j) = 0.5 + 0.25 * j;
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    int hits = 0;
    for (int k = 0; k < draws; ++k) {
      if (b.dot(SampleRademacher(n, rng)) >= alpha * b.norm()) ++hits;
    }
    const double bound = std::exp(-alpha * alpha / 2.0);
    const double se = std::sqrt(bound * (1.0 - bound) / draws);
    EXPECT_LE(static_cast<double>(hits) / draws, bound + 4.0 * se) << alpha;
  }
}

TEST(CheckTailBound, FullGrid) {
  std::vector<double> grid;
  for (int k = 1; k <= 79; ++k) grid.push_back(0.1 * k);
  const auto report = CheckTailBound(2, 60, grid);
  EXPECT_EQ(report.points_checked, 59 * 79);
  EXPECT_EQ(report.violations, 0);
  EXPECT_GT(report.min_margin, 0.0);
  // Recompute the margin independently.
  double margin = 1e300;
  for (int n = 2; n <= 60; ++n) {
    for (double a : grid) margin = std::min(margin, std::exp(-0.45 * a * a) - QuadratureTail(n, a));
  }
  EXPECT_NEAR(report.min_margin, margin, 1e-10);
}

TEST(CheckTailBound, EndpointZero) {
  const double zero[] = {0.0};
  const auto report = CheckTailBound(2, 10, zero);
  EXPECT_NEAR(report.min_margin, 0.5, 1e-14);
}

TEST(CheckpointChain, LinkValues) {
  const double checkpoints[] = {0.0, 1.2, 2.9, 3.8, 4.9, 6.3};
  const auto links = CheckCheckpointChain(checkpoints, 2, 39);
  ASSERT_EQ(links.size(), 5u);
  for (const auto& link : links) {
    double worst = 0.0;
    for (int n = 2; n <= 39; ++n) worst = std::max(worst, QuadratureTail(n, link.from));
    EXPECT_NEAR(link.max_tail, worst, 1e-10);
    EXPECT_DOUBLE_EQ(link.bound, std::exp(-0.45 * link.to * link.to));
    EXPECT_EQ(link.holds, link.max_tail < link.bound);
  }
  // m(1.2) >= S(2, 1.2) = arccos(1.2 / sqrt 2) / pi ~ 0.18 while
  // exp(-0.45 * 2.9^2) ~ 0.023, so the link 1.2 -> 2.9 of this grid fails.
  EXPECT_FALSE(links[1].holds);
  EXPECT_TRUE(links[0].holds);
}

// A finer chain does certify the bound for n <= 39: step greedily from 0 to
// the largest next checkpoint the current maximum tail allows.
TEST(CheckpointChain, GreedyChainCoversRange) {
  std::vector<double> points = {0.0};
  const double end = std::sqrt(39.0);
  while (points.back() < end && points.size() < 10000) {
    const double from = points.back();
    double worst = 0.0;
    for (int n = 2; n <= 39; ++n) worst = std::max(worst, TailS(n, from));
    if (worst == 0.0) break;
    const double next = std::sqrt(-std::log(worst) / 0.45) * (1.0 - 1e-9);
    ASSERT_GT(next, from + 1e-9) << "chain stalls at " << from;
    points.push_back(next);
  }
  const auto links = CheckCheckpointChain(points, 2, 39);
  for (const auto& link : links) EXPECT_TRUE(link.holds) << link.from;
  EXPECT_LT(points.size(), 10000u);
}

}  // namespace
}  // namespace maximin
