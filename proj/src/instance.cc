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

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "maximin/error.h"
#include "maximin/random.h"

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using json = nlohmann::json;

std::string_view GeometryName(Geometry geometry) {
  return geometry == Geometry::kBall ? "ball" : "box";
}

Geometry ParseGeometry(std::string_view name) {
  if (name == "ball") return Geometry::kBall;
  if (name == "box") return Geometry::kBox;
  throw std::invalid_argument("unknown geometry '" + std::string(name) +
                              "' (expected ball or box)");
}

DispersionInstance::DispersionInstance(Geometry geometry, MatrixXd points,
                                       VectorXd weights)
    : geometry_(geometry),
      points_(std::move(points)),
      weights_(std::move(weights)) {
  if (points_.rows() < 1) throw std::invalid_argument("dimension must be >= 1");
  if (points_.cols() < 1) throw std::invalid_argument("need at least one point");
  if (weights_.size() != points_.cols()) {
    throw std::invalid_argument("expected " + std::to_string(points_.cols()) +
                                " weights, got " +
                                std::to_string(weights_.size()));
  }
  if (!points_.allFinite()) throw std::invalid_argument("non-finite coordinate");
  for (int i = 0; i < weights_.size(); ++i) {
    if (!(weights_(i) > 0.0) || !std::isfinite(weights_(i))) {
      throw std::invalid_argument("weight " + std::to_string(i) +
                                  " must be positive and finite");
    }
  }
}

DispersionInstance::DispersionInstance(Geometry geometry, MatrixXd points)
    : DispersionInstance(geometry, points, VectorXd::Ones(points.cols())) {}

double DispersionInstance::mu() const {
  return geometry_ == Geometry::kBall ? 1.0 : static_cast<double>(dim());
}

bool operator==(const DispersionInstance& a, const DispersionInstance& b) {
  return a.geometry_ == b.geometry_ && a.points_.rows() == b.points_.rows() &&
         a.points_.cols() == b.points_.cols() && a.points_ == b.points_ &&
         a.weights_ == b.weights_;
}

Evaluation Evaluate(const DispersionInstance& inst, const VectorXd& x) {
  if (x.size() != inst.dim()) {
    throw std::invalid_argument("point has length " + std::to_string(x.size()) +
                                ", instance dimension is " +
                                std::to_string(inst.dim()));
  }
  Evaluation eval{x, std::numeric_limits<double>::infinity(), 0};
  for (int i = 0; i < inst.size(); ++i) {
    const double v = inst.weight(i) * (x - inst.point(i)).squaredNorm();
    if (v < eval.value) {
      eval.value = v;
      eval.argmin_index = i;
    }
  }
  return eval;
}

double Objective(const DispersionInstance& inst, const VectorXd& x) {
  return Evaluate(inst, x).value;
}

bool IsFeasible(const DispersionInstance& inst, const VectorXd& x, double tol) {
  if (x.size() != inst.dim()) return false;
  if (inst.geometry() == Geometry::kBall) return x.norm() <= 1.0 + tol;
  return x.lpNorm<Eigen::Infinity>() <= 1.0 + tol;
}

DispersionInstance GenerateRandom(int n, int m, std::uint64_t seed,
                                  Geometry geometry) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  Rng rng(seed);
  MatrixXd points(n, m);
  // Column-major fill so that instance j of a sweep can be cut from one pool.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) points(j, i) = rng.Uniform(-1.0, 1.0);
  }
  return DispersionInstance(geometry, std::move(points));
}

std::string ToJson(const DispersionInstance& inst) {
  json doc;
  doc["dim"] = inst.dim();
  doc["geometry"] = std::string(GeometryName(inst.geometry()));
  json points = json::array();
  for (int i = 0; i < inst.size(); ++i) {
    json p = json::array();
    for (int j = 0; j < inst.dim(); ++j) p.push_back(inst.points()(j, i));
    points.push_back(std::move(p));
  }
  doc["points"] = std::move(points);
  doc["weights"] = std::vector<double>(inst.weights().data(),
                                       inst.weights().data() + inst.size());
  // nlohmann/json prints doubles in shortest round-trip form.
  return doc.dump(2);
}

DispersionInstance FromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("dim").get<int>();
    if (n < 1) throw InstanceFormatError("dim must be >= 1");
    const Geometry geometry =
        ParseGeometry(doc.value("geometry", std::string("ball")));
    const auto& pts = doc.at("points");
    if (!pts.is_array() || pts.empty()) {
      throw InstanceFormatError("points must be a non-empty array");
    }
    const int m = static_cast<int>(pts.size());
    MatrixXd points(n, m);
    for (int i = 0; i < m; ++i) {
      if (!pts[i].is_array() || static_cast<int>(pts[i].size()) != n) {
        throw InstanceFormatError("point " + std::to_string(i) +
                                  " does not have length " + std::to_string(n));
      }
      for (int j = 0; j < n; ++j) points(j, i) = pts[i][j].get<double>();
    }
    VectorXd weights = VectorXd::Ones(m);
    if (doc.contains("weights")) {
      const auto& w = doc["weights"];
      if (!w.is_array() || static_cast<int>(w.size()) != m) {
        throw InstanceFormatError("weights must list one value per point");
      }
      for (int i = 0; i < m; ++i) weights(i) = w[i].get<double>();
    }
    return DispersionInstance(geometry, std::move(points), std::move(weights));
  } catch (const json::exception& e) {
    throw InstanceFormatError(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InstanceFormatError(e.what());
  }
}

DispersionInstance ReadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

void WriteInstance(const DispersionInstance& inst,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw MaximinError("cannot write " + path.string());
  out << ToJson(inst) << '\n';
}

}  // namespace maximin
