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

#ifndef MAXIMIN_ORACLE_H_
#define MAXIMIN_ORACLE_H_

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "maximin/instance.h"
#include "maximin/random.h"

namespace maximin {

struct OracleOptions {
  // Phase-1 sample count.
  std::int64_t budget = 200'000;
  // A sample is refined when it ranks among the best `top_k` of the samples
  // drawn so far. This includes the final top_k and only depends on the
  // prefix of the stream, so a larger budget never finds a worse point.
  int top_k = 50;
  int max_refine_steps = 400;
  double step_tol = 1e-10;
};

struct OracleTrace {
  std::int64_t samples = 0;
  int refinements = 0;
  std::int64_t refinement_steps = 0;
  double best_sampled = 0.0;  // best value before refinement
};

// Heuristic global maximum of f. Not a certificate: pair it with the
// relaxation upper bound to bracket the optimum.
struct OracleResult {
  Eigen::VectorXd x_best;
  double value = 0.0;  // Objective(inst, x_best)
  OracleTrace trace;
  std::string certified_radius;  // informal quality note
};

// Phase 1 samples the region (ball: sphere and interior alternately; box:
// all 2^n corners when n <= 12, then random corners, faces and interior).
// Phase 2 refines candidates by minorize-maximize: each w_i ||x - x^i||^2 is
// convex, so its tangent plane at the current point bounds it from below,
// and maximizing the minimum of the tangent planes over the region never
// decreases f. A Newton solve on the active pieces finishes each refinement.
OracleResult SolveGlobal(const DispersionInstance& inst, Rng& rng,
                         const OracleOptions& options = {});

// Local refinement from one start; returns the final point.
Eigen::VectorXd RefineLocal(const DispersionInstance& inst, const Eigen::VectorXd& start,
                            const OracleOptions& options, std::int64_t* steps = nullptr);

// Max of x^T Q x over {-1, 1}^n by enumeration, after checking that no point
// of a regular grid on [-1, 1]^n (grid_points per axis) exceeds it; throws
// MaximinError if one does. Q must be positive definite.
double SolveBqpRelaxCheck(const Eigen::MatrixXd& q, int grid_points = 21);

}  // namespace maximin

#endif  // MAXIMIN_ORACLE_H_
