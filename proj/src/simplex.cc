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

#include <stdexcept>
#include <vector>

namespace maximin {

using Eigen::MatrixXd;
using Eigen::VectorXd;

LpResult SolveLp(const MatrixXd& a, const VectorXd& b, const VectorXd& c,
                 int max_pivots) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (b.size() != rows || c.size() != cols) {
    throw std::invalid_argument("SolveLp: shape mismatch");
  }
  if ((b.array() < 0.0).any()) {
    throw std::invalid_argument("SolveLp: right-hand side must be nonnegative");
  }
  constexpr double kEps = 1e-12;

  // Tableau [A I | b] with the reduced-cost row -c appended; column indices
  // cols .. cols+rows-1 are the slacks.
  const int width = cols + rows;
  MatrixXd tab = MatrixXd::Zero(rows + 1, width + 1);
  tab.topLeftCorner(rows, cols) = a;
  tab.block(0, cols, rows, rows).setIdentity();
  tab.topRightCorner(rows, 1) = b;
  tab.bottomLeftCorner(1, cols) = -c.transpose();
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;

  LpResult result;
  while (true) {
    // Bland: smallest index with negative reduced cost enters.
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (tab(rows, j) < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      result.status = LpStatus::kOptimal;
      break;
    }
    if (result.pivots >= max_pivots) {
      result.status = LpStatus::kIterationLimit;
      break;
    }
    // Ratio test; ties go to the smallest basic index.
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      if (tab(r, enter) > kEps) {
        const double ratio = tab(r, width) / tab(r, enter);
        if (leave < 0 || ratio < best_ratio - kEps ||
            (ratio <= best_ratio + kEps && basis[r] < basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      result.status = LpStatus::kUnbounded;
      break;
    }
    tab.row(leave) /= tab(leave, enter);
    for (int r = 0; r <= rows; ++r) {
      if (r != leave && tab(r, enter) != 0.0) {
        tab.row(r) -= tab(r, enter) * tab.row(leave);
      }
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.x = VectorXd::Zero(cols);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < cols) result.x(basis[r]) = tab(r, width);
  }
  result.value = c.dot(result.x);
  return result;
}

}  // namespace maximin
