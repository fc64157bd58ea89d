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

#ifndef MAXIMIN_BENCH_H_
#define MAXIMIN_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "maximin/oracle.h"

namespace maximin {

struct BenchConfig {
  int n = 5;
  int m_first = 6;
  int m_last = 30;
  int runs = 10;
  double rho = 0.9999;
  std::uint64_t seed = 0;
  OracleOptions oracle;
  // 0 = std::thread::hardware_concurrency().
  int threads = 0;
};

// One row of the comparison between the relaxation-based Rademacher rounding
// ("general") and the sphere sampler ("new") on a ball instance.
struct BenchRecord {
  int m = 0;
  double v_oracle = 0.0;
  double v_cr = 0.0;
  double cr_gap = 0.0;
  double gen_vmax = 0.0, gen_vmin = 0.0, gen_vave = 0.0, gen_lb = 0.0;
  double new_vmax = 0.0, new_vmin = 0.0, new_vave = 0.0, new_lb = 0.0;
  std::vector<double> gen_values;
  std::vector<double> new_values;
};

// For m = m_first .. m_last, instance m takes the next m columns of one
// n x (sum of m) matrix drawn uniformly from [-1, 1]. Records come back
// ordered by m whatever the thread count; the output depends on the seed only.
std::vector<BenchRecord> RunBench(const BenchConfig& config);

// Empty when the record satisfies: v_cr + gap >= v_oracle, new_lb > 0 and
// every per-run value <= v_cr + gap. Otherwise a description of the failure.
std::string CheckRecord(const BenchRecord& record, double slack = 1e-9);

inline constexpr const char* kBenchCsvHeader =
    "m,v_oracle,v_cr,gen_vmax,gen_vmin,gen_vave,gen_lb,new_vmax,new_vmin,new_vave,new_lb";

std::string BenchCsv(const std::vector<BenchRecord>& records);
std::string BenchMarkdown(const std::vector<BenchRecord>& records);

}  // namespace maximin

#endif  // MAXIMIN_BENCH_H_
