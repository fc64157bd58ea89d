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

#ifndef MAXIMIN_RANDOM_H_
#define MAXIMIN_RANDOM_H_

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace maximin {

// Seedable pseudo-random stream. Every randomized routine takes an Rng by
// reference; give each thread its own stream (see Split / ForStream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Stream `stream_id` of the family rooted at `seed`. Streams with distinct
  // ids are statistically independent and do not depend on call order.
  static Rng ForStream(std::uint64_t seed, std::uint64_t stream_id);

  // Derives a child stream and advances this one.
  Rng Split();

  double Uniform(double lo, double hi);
  double Normal();
  // +1 or -1 with equal probability.
  double Sign();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Vector of independent +-1 entries.
Eigen::VectorXd SampleRademacher(int n, Rng& rng);

}  // namespace maximin

#endif  // MAXIMIN_RANDOM_H_
