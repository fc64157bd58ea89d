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

#include "maximin/bench.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "maximin/approx.h"
#include "maximin/instance.h"
#include "maximin/relax.h"

namespace maximin {

namespace {

void Summarize(const std::vector<double>& v, double& vmax, double& vmin, double& vave) {
  vmax = *std::max_element(v.begin(), v.end());
  vmin = *std::min_element(v.begin(), v.end());
  vave = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

BenchRecord RunOne(const BenchConfig& config, const DispersionInstance& inst) {
  const int m = inst.size();
  BenchRecord rec;
  rec.m = m;
  Rng base = Rng::ForStream(config.seed, static_cast<std::uint64_t>(m));

  const RelaxationResult relax = SolveCrBall(inst);
  rec.v_cr = relax.zeta_star;
  rec.cr_gap = relax.gap;

  Rng oracle_rng = base.Split();
  rec.v_oracle = SolveGlobal(inst, oracle_rng, config.oracle).value;

  for (int run = 0; run < config.runs; ++run) {
    Rng gen_rng = base.Split();
    const ApproxResult gen = ApproxGeneralFixed(inst, relax, config.rho, gen_rng);
    rec.gen_values.push_back(gen.f_value);
    rec.gen_lb = gen.bound_r * relax.zeta_star;

    Rng new_rng = base.Split();
    const ApproxResult fresh = ApproxBall(inst, config.rho, new_rng);
    rec.new_values.push_back(fresh.f_value);
    rec.new_lb = fresh.bound_r * relax.zeta_star;
  }
  Summarize(rec.gen_values, rec.gen_vmax, rec.gen_vmin, rec.gen_vave);
  Summarize(rec.new_values, rec.new_vmax, rec.new_vmin, rec.new_vave);
  return rec;
}

}  // namespace

std::vector<BenchRecord> RunBench(const BenchConfig& config) {
  if (config.n < 2) throw std::invalid_argument("bench needs n >= 2");
  if (config.m_first < 1 || config.m_last < config.m_first) {
    throw std::invalid_argument("bench needs 1 <= m_first <= m_last");
  }
  if (config.runs < 1) throw std::invalid_argument("bench needs runs >= 1");

  const int count = config.m_last - config.m_first + 1;
  int total = 0;
  for (int m = config.m_first; m <= config.m_last; ++m) total += m;
  const DispersionInstance pool = GenerateRandom(config.n, total, config.seed);

  std::vector<DispersionInstance> instances;
  instances.reserve(count);
  for (int m = config.m_first, offset = 0; m <= config.m_last; offset += m, ++m) {
    instances.emplace_back(Geometry::kBall, pool.points().middleCols(offset, m));
  }

  std::vector<BenchRecord> records(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < count; k = next++) records[k] = RunOne(config, instances[k]);
  };
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool_threads;
    for (int t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
  }
  return records;
}

std::string CheckRecord(const BenchRecord& r, double slack) {
  std::ostringstream out;
  const double upper = r.v_cr + r.cr_gap + slack;
  if (r.v_oracle > upper) out << "oracle " << r.v_oracle << " exceeds relaxation bound; ";
  if (!(r.new_lb > 0.0)) out << "new lower bound " << r.new_lb << " not positive; ";
  for (double v : r.gen_values) {
    if (v > upper) out << "general run value " << v << " exceeds relaxation; ";
  }
  for (double v : r.new_values) {
    if (v > upper) out << "new run value " << v << " exceeds relaxation; ";
  }
  return out.str();
}

std::string BenchCsv(const std::vector<BenchRecord>& records) {
  std::string out = std::string(kBenchCsvHeader) + "\n";
  char line[512];
  for (const BenchRecord& r : records) {
    std::snprintf(line, sizeof line,
                  "%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.m,
                  r.v_oracle, r.v_cr, r.gen_vmax, r.gen_vmin, r.gen_vave, r.gen_lb,
                  r.new_vmax, r.new_vmin, r.new_vave, r.new_lb);
    out += line;
  }
  return out;
}

std::string BenchMarkdown(const std::vector<BenchRecord>& records) {
  std::string out =
      "| m | v(P) | v(CR) | general v_max | general v_min | general v_ave | general l.b. "
      "| new v_max | new v_min | new v_ave | new l.b. |\n"
      "|---|---|---|---|---|---|---|---|---|---|---|\n";
  char line[512];
  for (const BenchRecord& r : records) {
    std::snprintf(line, sizeof line,
                  "| %d | %.2f | %.2f | %.2f | %.2f | %.2f | %.2f | %.2f | %.2f | %.2f | %.2f |\n",
                  r.m, r.v_oracle, r.v_cr, r.gen_vmax, r.gen_vmin, r.gen_vave, r.gen_lb,
                  r.new_vmax, r.new_vmin, r.new_vave, r.new_lb);
    out += line;
  }
  return out;
}

}  // namespace maximin
