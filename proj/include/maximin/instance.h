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

#ifndef MAXIMIN_INSTANCE_H_
#define MAXIMIN_INSTANCE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace maximin {

enum class Geometry { kBall, kBox };

std::string_view GeometryName(Geometry geometry);
Geometry ParseGeometry(std::string_view name);

// m weighted points in R^n together with the feasible region: the unit ball
// {x : ||x|| <= 1} or the box [-1, 1]^n. Immutable once constructed.
class DispersionInstance {
 public:
  // `points` holds one point per column (n x m). Throws std::invalid_argument
  // when n or m is zero, a weight is not strictly positive, or a value is not
  // finite.
  DispersionInstance(Geometry geometry, Eigen::MatrixXd points,
                     Eigen::VectorXd weights);
  // Unit weights.
  DispersionInstance(Geometry geometry, Eigen::MatrixXd points);

  Geometry geometry() const { return geometry_; }
  int dim() const { return static_cast<int>(points_.rows()); }
  int size() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  auto point(int i) const { return points_.col(i); }
  double weight(int i) const { return weights_(i); }

  // max ||x||^2 over the feasible region: 1 for the ball, n for the box.
  double mu() const;

  friend bool operator==(const DispersionInstance& a,
                         const DispersionInstance& b);

 private:
  Geometry geometry_;
  Eigen::MatrixXd points_;
  Eigen::VectorXd weights_;
};

struct Evaluation {
  Eigen::VectorXd point;
  double value = 0.0;
  // First index attaining the minimum (0-based).
  int argmin_index = 0;
};

// f(x) = min_i w_i ||x - x^i||^2. x need not be feasible.
Evaluation Evaluate(const DispersionInstance& inst, const Eigen::VectorXd& x);
double Objective(const DispersionInstance& inst, const Eigen::VectorXd& x);

bool IsFeasible(const DispersionInstance& inst, const Eigen::VectorXd& x,
                double tol = 1e-12);

// m points i.i.d. uniform on [-1, 1]^n with unit weights.
DispersionInstance GenerateRandom(int n, int m, std::uint64_t seed,
                                  Geometry geometry = Geometry::kBall);

// JSON: {"dim": n, "geometry": "ball"|"box", "points": [[...], ...],
// "weights": [...]}; "weights" is optional and defaults to all ones.
std::string ToJson(const DispersionInstance& inst);
DispersionInstance FromJson(std::string_view text);
DispersionInstance ReadInstance(const std::filesystem::path& path);
void WriteInstance(const DispersionInstance& inst,
                   const std::filesystem::path& path);

}  // namespace maximin

#endif  // MAXIMIN_INSTANCE_H_
