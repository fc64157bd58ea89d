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

#include "maximin/random.h"

#include <array>

namespace maximin {

Rng::Rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

Rng Rng::ForStream(std::uint64_t seed, std::uint64_t stream_id) {
  Rng rng(0);
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32), 0x9e3779b9u};
  rng.engine_.seed(seq);
  return rng;
}

Rng Rng::Split() {
  std::array<std::uint32_t, 4> words;
  for (auto& w : words) w = static_cast<std::uint32_t>(engine_());
  Rng child(0);
  std::seed_seq seq(words.begin(), words.end());
  child.engine_.seed(seq);
  return child;
}

double Rng::Uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::Normal() { return normal_(engine_); }

double Rng::Sign() { return (engine_() >> 63) ? 1.0 : -1.0; }

Eigen::VectorXd SampleRademacher(int n, Rng& rng) {
  Eigen::VectorXd xi(n);
  for (int j = 0; j < n; ++j) xi(j) = rng.Sign();
  return xi;
}

}  // namespace maximin
