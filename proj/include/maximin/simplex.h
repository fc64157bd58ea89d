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

#ifndef MAXIMIN_SIMPLEX_H_
#define MAXIMIN_SIMPLEX_H_

#include <Eigen/Core>

namespace maximin {

enum class LpStatus { kOptimal, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  Eigen::VectorXd x;
  double value = 0.0;
  int pivots = 0;
};

// maximize c^T x  s.t.  A x <= b, x >= 0, with b >= 0 so that the origin is a
// feasible basis. Dense tableau with Bland's rule, which cannot cycle on the
// heavily degenerate homogeneous systems this is used for. Sized for a few
// hundred rows at most.
LpResult SolveLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c, int max_pivots = 100000);

}  // namespace maximin

#endif  // MAXIMIN_SIMPLEX_H_
