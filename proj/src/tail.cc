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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>

namespace maximin {

double TailS(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("TailS requires n >= 2");
  if (!(alpha >= 0.0)) throw std::invalid_argument("TailS requires alpha >= 0");
  const double a = alpha / std::sqrt(static_cast<double>(n));
  if (a >= 1.0) return 0.0;
  if (n == 2) return std::acos(a) / std::numbers::pi;
  return 0.5 * boost::math::ibeta(0.5 * (n - 1), 0.5, 1.0 - a * a);
}

double TailSInverse(int n, double beta) {
  if (n < 2) throw std::invalid_argument("TailSInverse requires n >= 2");
  if (!(beta > 0.0 && beta < 0.5)) {
    throw std::invalid_argument("TailSInverse requires beta in (0, 0.5), got " +
                                std::to_string(beta));
  }
  double lo = 0.0;
  double hi = std::sqrt(static_cast<double>(n));
  // Run to the resolution of double rather than stopping at |S - beta| <= 1e-10.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (TailS(n, mid) > beta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double s_lo = TailS(n, lo), s_hi = TailS(n, hi);
  return std::abs(s_lo - beta) <= std::abs(s_hi - beta) ? lo : hi;
}

double TailInverseUpperBound(double beta) {
  return std::sqrt(20.0 / 9.0 * std::log(1.0 / beta));
}

Eigen::VectorXd SampleSphere(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("SampleSphere requires n >= 1");
  Eigen::VectorXd v(n);
  double norm = 0.0;
  do {
    for (int j = 0; j < n; ++j) v(j) = rng.Normal();
    norm = v.norm();
  } while (!(norm > 0.0));
  return v / norm;
}

TailBoundReport CheckTailBound(int n_min, int n_max, std::span<const double> alphas) {
  TailBoundReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (int n = n_min; n <= n_max; ++n) {
    for (double alpha : alphas) {
      const double margin = std::exp(-0.45 * alpha * alpha) - TailS(n, alpha);
      ++report.points_checked;
      if (!(margin > 0.0)) ++report.violations;
      if (margin < report.min_margin) {
        report.min_margin = margin;
        report.worst_n = n;
        report.worst_alpha = alpha;
      }
    }
  }
  return report;
}

std::vector<CheckpointLink> CheckCheckpointChain(std::span<const double> checkpoints,
                                                 int n_min, int n_max) {
  std::vector<CheckpointLink> links;
  for (std::size_t k = 0; k + 1 < checkpoints.size(); ++k) {
    CheckpointLink link;
    link.from = checkpoints[k];
    link.to = checkpoints[k + 1];
    for (int n = n_min; n <= n_max; ++n) {
      link.max_tail = std::max(link.max_tail, TailS(n, link.from));
    }
    link.bound = std::exp(-0.45 * link.to * link.to);
    link.holds = link.max_tail < link.bound;
    links.push_back(link);
  }
  return links;
}

}  // namespace maximin
