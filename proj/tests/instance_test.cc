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


#include "maximin/instance.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include <unistd.h>

#include <gtest/gtest.h>

#include "maximin/error.h"

namespace maximin {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

DispersionInstance TwoPointLine() {
  MatrixXd pts(1, 2);
  pts << 1.0, -1.0;
  return DispersionInstance(Geometry::kBall, pts);
}

DispersionInstance ThreePointPlane() {
  MatrixXd pts(2, 3);
  pts << 1.0, 2.0, 1.0,
         2.0, 3.0, 5.0;
  return DispersionInstance(Geometry::kBall, pts);
}

TEST(Evaluate, SymmetricPairAtOrigin) {
  const auto e = Evaluate(TwoPointLine(), VectorXd::Zero(1));
  EXPECT_DOUBLE_EQ(e.value, 1.0);
  EXPECT_EQ(e.argmin_index, 0);  // tie between both points; first wins
}

TEST(Evaluate, SymmetricPairAtEndpoints) {
  EXPECT_DOUBLE_EQ(Objective(TwoPointLine(), VectorXd::Constant(1, 1.0)), 0.0);
  EXPECT_DOUBLE_EQ(Objective(TwoPointLine(), VectorXd::Constant(1, 0.5)), 0.25);
}

TEST(Evaluate, AtADataPointIsZero) {
  const auto inst = ThreePointPlane();
  const auto e = Evaluate(inst, inst.point(2));
  EXPECT_EQ(e.value, 0.0);
  EXPECT_EQ(e.argmin_index, 2);
}

TEST(Evaluate, NearestOfThreeAtOrigin) {
  const auto e = Evaluate(ThreePointPlane(), VectorXd::Zero(2));
  EXPECT_DOUBLE_EQ(e.value, 5.0);
  EXPECT_EQ(e.argmin_index, 0);
}

TEST(Evaluate, DimensionMismatchThrows) {
  EXPECT_THROW(Evaluate(ThreePointPlane(), VectorXd::Zero(3)), std::invalid_argument);
}

TEST(Evaluate, MinimumPropertyAndPermutation) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  MatrixXd pts(4, 9);
  VectorXd w(9);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 4; ++j) pts(j, i) = u(gen);
    w(i) = 0.2 + std::abs(u(gen));
  }
  const DispersionInstance inst(Geometry::kBall, pts, w);
  std::vector<int> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  MatrixXd pp(4, 9);
  VectorXd pw(9);
  for (int i = 0; i < 9; ++i) {
    pp.col(i) = pts.col(perm[i]);
    pw(i) = w(perm[i]);
  }
  const DispersionInstance permuted(Geometry::kBall, pp, pw);
  const DispersionInstance scaled(Geometry::kBall, pts, 3.5 * w);

  for (int trial = 0; trial < 200; ++trial) {
    VectorXd x(4);
    for (int j = 0; j < 4; ++j) x(j) = u(gen);
    const auto e = Evaluate(inst, x);
    for (int k = 0; k < 9; ++k) {
      EXPECT_LE(e.value, w(k) * (x - pts.col(k)).squaredNorm());
    }
    EXPECT_DOUBLE_EQ(e.value, w(e.argmin_index) * (x - pts.col(e.argmin_index)).squaredNorm());
    EXPECT_DOUBLE_EQ(Objective(permuted, x), e.value);
    const auto es = Evaluate(scaled, x);
    EXPECT_NEAR(es.value, 3.5 * e.value, 1e-12 * es.value);
    EXPECT_EQ(es.argmin_index, e.argmin_index);
  }
}

TEST(Instance, RejectsBadInput) {
  MatrixXd pts = MatrixXd::Ones(2, 2);
  EXPECT_THROW(DispersionInstance(Geometry::kBall, pts, VectorXd::Zero(2)),
               std::invalid_argument);
  EXPECT_THROW(DispersionInstance(Geometry::kBall, pts, VectorXd::Ones(3)),
               std::invalid_argument);
  EXPECT_THROW(DispersionInstance(Geometry::kBall, MatrixXd(0, 2)), std::invalid_argument);
  pts(0, 0) = std::nan("");
  EXPECT_THROW(DispersionInstance(Geometry::kBall, pts), std::invalid_argument);
}

TEST(Instance, MuAndFeasibility) {
  const auto ball = GenerateRandom(3, 4, 1, Geometry::kBall);
  const auto box = GenerateRandom(3, 4, 1, Geometry::kBox);
  EXPECT_EQ(ball.mu(), 1.0);
  EXPECT_EQ(box.mu(), 3.0);
  const VectorXd corner = VectorXd::Ones(3);
  EXPECT_FALSE(IsFeasible(ball, corner));
  EXPECT_TRUE(IsFeasible(box, corner));
  EXPECT_TRUE(IsFeasible(ball, corner.normalized()));
}

TEST(GenerateRandom, Deterministic) {
  EXPECT_EQ(GenerateRandom(5, 6, 42), GenerateRandom(5, 6, 42));
  EXPECT_FALSE(GenerateRandom(5, 6, 42) == GenerateRandom(5, 6, 43));
}

TEST(GenerateRandom, RangeAndUnitWeights) {
  const auto inst = GenerateRandom(5, 30, 3);
  EXPECT_LE(inst.points().cwiseAbs().maxCoeff(), 1.0);
  EXPECT_EQ(inst.weights(), VectorXd::Ones(30));
}

TEST(GenerateRandom, CoordinateMeansNearZero) {
  // Each coordinate mean over 30 draws of U(-1, 1): sd = (2 / sqrt(12)) / sqrt(30).
  // Pool five seeds to get 150 draws per coordinate.
  VectorXd sum = VectorXd::Zero(5);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    sum += GenerateRandom(5, 30, seed).points().rowwise().sum();
  }
  const double bound = 3.0 * (2.0 / std::sqrt(12.0)) / std::sqrt(150.0);
  for (int j = 0; j < 5; ++j) EXPECT_LT(std::abs(sum(j) / 150.0), bound) << j;
}

class JsonTest : public ::testing::Test {
 protected:
  std::filesystem::path dir_ = std::filesystem::temp_directory_path() /
                               ("maximin_instance_test_" + std::to_string(::getpid()));
  void SetUp() override { std::filesystem::create_directories(dir_); }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }
};

TEST_F(JsonTest, RoundTrip) {
  MatrixXd pts(2, 3);
  pts << 0.1, -0.25, 1.0 / 3.0, 7.0, 0.0, -1e-17;
  const DispersionInstance inst(Geometry::kBox, pts, VectorXd::LinSpaced(3, 0.5, 2.0));
  const auto path = dir_ / "inst.json";
  WriteInstance(inst, path);
  EXPECT_EQ(ReadInstance(path), inst);
  EXPECT_EQ(FromJson(ToJson(inst)), inst);
}

TEST_F(JsonTest, WeightsDefaultToOne) {
  const auto inst = FromJson(R"({"dim": 2, "geometry": "ball", "points": [[1, 2], [3, 4]]})");
  EXPECT_EQ(inst.weights(), VectorXd::Ones(2));
  EXPECT_EQ(inst.point(1)(0), 3.0);
  EXPECT_EQ(inst.geometry(), Geometry::kBall);
}

TEST_F(JsonTest, RejectsZeroWeight) {
  const auto path = Write("w.json",
      R"({"dim": 1, "geometry": "ball", "points": [[1], [-1]], "weights": [1, 0]})");
  EXPECT_THROW(ReadInstance(path), InstanceFormatError);
}

TEST_F(JsonTest, RejectsWrongPointLength) {
  const auto path = Write("len.json",
      R"({"dim": 2, "geometry": "ball", "points": [[1, 2], [3]]})");
  EXPECT_THROW(ReadInstance(path), InstanceFormatError);
}

TEST_F(JsonTest, RejectsMalformed) {
  EXPECT_THROW(ReadInstance(Write("bad.json", "{not json")), InstanceFormatError);
  EXPECT_THROW(FromJson(R"({"dim": 1, "geometry": "disk", "points": [[0]]})"),
               InstanceFormatError);
  EXPECT_THROW(FromJson(R"({"dim": 1, "geometry": "ball", "points": []})"),
               InstanceFormatError);
  EXPECT_THROW(ReadInstance(dir_ / "missing.json"), InstanceFormatError);
}

}  // namespace
}  // namespace maximin
