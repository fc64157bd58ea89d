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

// Command-line front end: solve, relax, approx, bench, hardness-gen, tail.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maximin/approx.h"
#include "maximin/bench.h"
#include "maximin/error.h"
#include "maximin/exact.h"
#include "maximin/hardness.h"
#include "maximin/instance.h"
#include "maximin/oracle.h"
#include "maximin/relax.h"
#include "maximin/tail.h"

namespace {

using json = nlohmann::json;
using maximin::DispersionInstance;

std::vector<double> ToVector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

json RelaxationJson(const maximin::RelaxationResult& r) {
  return {{"zeta_star", r.zeta_star},
          {"gap", r.gap},
          {"x_star", ToVector(r.x_star)},
          {"iterations", r.iterations},
          {"converged", r.converged}};
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw maximin::MaximinError("cannot write " + path);
  out << text;
}

std::string Format(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// "a..b" or a single value.
void ParseRange(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--m", "expected an integer or a range a..b");
  }
  if (lo < 1 || hi < lo) throw CLI::ValidationError("--m", "empty or invalid range");
}

std::vector<std::int64_t> ParseIntList(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--a", "expected comma-separated integers");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted maximin dispersion over the unit ball and box"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly or by the sampling oracle");
  std::string solve_path;
  bool solve_exact = false, solve_oracle = false;
  std::int64_t budget = 200000;
  std::uint64_t seed = 0;
  double tol = 0.0;
  solve->add_option("instance", solve_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve->add_flag("--exact", solve_exact, "Tight relaxation lift (needs a nonzero solution of the sign system)");
  solve->add_flag("--oracle", solve_oracle, "Sampling + local refinement search");
  solve->add_option("--budget", budget, "Oracle sample budget")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("--tol", tol, "Relaxation gap tolerance (0 = default)");

  // relax
  auto* relax = app.add_subcommand("relax", "Solve the convex relaxation");
  std::string relax_path;
  bool lift = false;
  relax->add_option("instance", relax_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  relax->add_flag("--lift", lift, "Also emit the lifted semidefinite-feasible matrix");
  relax->add_option("--tol", tol, "Gap tolerance (0 = default)");

  // approx
  auto* approx = app.add_subcommand("approx", "Run a randomized approximation algorithm");
  std::string approx_path, algo = "ball", approx_out;
  double rho = 0.9999;
  int runs = 10;
  approx->add_option("instance", approx_path, "Instance JSON")->required()->check(CLI::ExistingFile);
  approx->add_option("--algo", algo, "ball | general | box")
      ->check(CLI::IsMember({"ball", "general", "box"}));
  approx->add_option("--rho", rho, "Failure probability parameter in (0,1)");
  approx->add_option("--runs", runs, "Independent runs")->check(CLI::PositiveNumber);
  approx->add_option("--seed", seed, "Random seed");
  approx->add_option("--out", approx_out, "CSV output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Compare the two ball algorithms on random instances");
  maximin::BenchConfig config;
  std::string m_range = "6..30", bench_out, format = "csv";
  bench->add_option("--n", config.n, "Dimension")->check(CLI::Range(2, 1000));
  bench->add_option("--m", m_range, "Point count or range a..b");
  bench->add_option("--runs", config.runs, "Runs per algorithm")->check(CLI::PositiveNumber);
  bench->add_option("--rho", config.rho, "Failure probability parameter in (0,1)");
  bench->add_option("--seed", config.seed, "Random seed");
  bench->add_option("--budget", config.oracle.budget, "Oracle sample budget")->check(CLI::PositiveNumber);
  bench->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  bench->add_option("--out", bench_out, "Output file (default stdout)");
  bench->add_option("--format", format, "csv | md")->check(CLI::IsMember({"csv", "md"}));

  // hardness-gen
  auto* hard = app.add_subcommand("hardness-gen", "Emit the partition-reduction ball instance");
  std::string a_text, hard_out, report_out;
  hard->add_option("--a", a_text, "Comma-separated nonzero integers")->required();
  hard->add_option("--out", hard_out, "Instance JSON path")->required();
  hard->add_option("--report", report_out, "Identity report path (default <out>.report.json)");

  // tail
  auto* tail = app.add_subcommand("tail", "Spherical-cap tail function");
  tail->require_subcommand(1);
  int tail_n = 2, n_max = 60;
  double alpha = 0.0, beta = 0.25;
  auto* tail_s = tail->add_subcommand("s", "S(n, alpha)");
  tail_s->add_option("--n", tail_n)->required();
  tail_s->add_option("--alpha", alpha)->required();
  auto* tail_inv = tail->add_subcommand("inv", "S^{-1}(n, beta)");
  tail_inv->add_option("--n", tail_n)->required();
  tail_inv->add_option("--beta", beta)->required();
  auto* tail_check = tail->add_subcommand("check", "Check S(n,a) < exp(-0.45 a^2) on a grid");
  tail_check->add_option("--n-max", n_max, "Largest n checked")->check(CLI::Range(2, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here with code 0.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      const DispersionInstance inst = maximin::ReadInstance(solve_path);
      json out;
      if (solve_exact) {
        if (inst.geometry() != maximin::Geometry::kBall) {
          std::cerr << "error: --exact applies to ball instances only\n";
          return 2;
        }
        const auto exact = maximin::SolveExact(inst, tol);
        if (!exact) {
          std::cerr << "error: not applicable: the sign system (x^i)^T x <= 0 for all i "
                       "has no nonzero solution, so the relaxation need not be tight\n";
          return 3;
        }
        out["exact"] = {{"x", ToVector(exact->x_opt)},
                        {"value", exact->value},
                        {"alpha", exact->alpha},
                        {"direction", ToVector(exact->certificate)},
                        {"relaxation", RelaxationJson(exact->relaxation)}};
      }
      if (solve_oracle || !solve_exact) {
        maximin::Rng rng(seed);
        maximin::OracleOptions options;
        options.budget = budget;
        const auto res = maximin::SolveGlobal(inst, rng, options);
        const auto relax_res = maximin::SolveRelaxation(inst, tol);
        out["oracle"] = {{"x", ToVector(res.x_best)},
                         {"value", res.value},
                         {"samples", res.trace.samples},
                         {"refinements", res.trace.refinements},
                         {"relaxation_upper_bound", relax_res.upper_bound()},
                         {"note", res.certified_radius}};
      }
      std::cout << out.dump(2) << '\n';
    } else if (*relax) {
      const DispersionInstance inst = maximin::ReadInstance(relax_path);
      const auto res = maximin::SolveRelaxation(inst, tol);
      json out = RelaxationJson(res);
      if (lift) {
        const auto z = maximin::Lift(res, inst);
        json rows = json::array();
        for (int r = 0; r < z.entries().rows(); ++r) rows.push_back(ToVector(z.entries().row(r)));
        out["lift"] = rows;
        out["gamma1"] = maximin::Gamma1(z);
      }
      std::cout << out.dump(2) << '\n';
    } else if (*approx) {
      const DispersionInstance inst = maximin::ReadInstance(approx_path);
      std::optional<maximin::RelaxationResult> relaxation;
      if (algo == "general") relaxation = maximin::SolveRelaxation(inst);
      std::string csv = "run,f_value,bound_r,refined_bound,alpha,draws\n";
      for (int run = 0; run < runs; ++run) {
        maximin::Rng rng = maximin::Rng::ForStream(seed, static_cast<std::uint64_t>(run));
        maximin::ApproxResult res;
        if (algo == "ball") {
          res = maximin::ApproxBall(inst, rho, rng);
        } else if (algo == "general") {
          res = maximin::ApproxGeneralFixed(inst, *relaxation, rho, rng);
        } else {
          res = maximin::ApproxBoxSimplified(inst, rho, rng);
        }
        char line[256];
        std::snprintf(line, sizeof line, "%d,%.10g,%.10g,%.10g,%.10g,%lld\n", run, res.f_value,
                      res.bound_r, res.refined_bound, res.alpha_used,
                      static_cast<long long>(res.raw_samples));
        csv += line;
      }
      WriteText(approx_out, csv);
    } else if (*bench) {
      ParseRange(m_range, config.m_first, config.m_last);
      const auto records = maximin::RunBench(config);
      WriteText(bench_out, format == "md" ? maximin::BenchMarkdown(records)
                                          : maximin::BenchCsv(records));
      int bad = 0;
      for (const auto& r : records) {
        const std::string problem = maximin::CheckRecord(r);
        if (!problem.empty()) {
          std::cerr << "m=" << r.m << ": " << problem << '\n';
          ++bad;
        }
      }
      if (bad > 0) return 4;
    } else if (*hard) {
      auto artifact = maximin::BuildHardness(ParseIntList(a_text));
      maximin::WriteInstance(artifact.instance, hard_out);
      const auto id = maximin::CheckIdentities(artifact);
      json report = {{"a", artifact.a},
                     {"t_star", artifact.t_star},
                     {"beta", artifact.beta_val},
                     {"gamma", artifact.gamma_val},
                     {"lambda", ToVector(artifact.lambda_diag)},
                     {"trace_lambda", artifact.Trace()},
                     {"g_residual", artifact.g_residual},
                     {"partition_feasible", maximin::PartitionFeasible(artifact.a)},
                     {"predicted_value_if_feasible", 2.0 - 2.0 / std::sqrt(artifact.Trace())},
                     {"residuals",
                      {{"gamma_identity", id.gamma_identity},
                       {"lambda_identity", id.lambda_identity},
                       {"row_norm", id.row_norm_error},
                       {"sherman_morrison", id.sherman_morrison},
                       {"quadratic_form", id.quadratic_form}}}};
      WriteText(report_out.empty() ? hard_out + ".report.json" : report_out,
                report.dump(2) + "\n");
    } else if (*tail) {
      if (*tail_s) {
        std::cout << Format(maximin::TailS(tail_n, alpha)) << '\n';
      } else if (*tail_inv) {
        std::cout << Format(maximin::TailSInverse(tail_n, beta)) << '\n';
      } else {
        std::vector<double> grid;
        for (int k = 1; k <= 79; ++k) grid.push_back(0.1 * k);
        const auto report = maximin::CheckTailBound(2, n_max, grid);
        std::cout << "points " << report.points_checked << ", violations "
                  << report.violations << ", min margin " << Format(report.min_margin)
                  << " at n=" << report.worst_n << " alpha=" << Format(report.worst_alpha)
                  << '\n';
        const double checkpoints[] = {0.0, 1.2, 2.9, 3.8, 4.9, 6.3};
        bool chain_ok = true;
        for (const auto& link : maximin::CheckCheckpointChain(checkpoints, 2, 39)) {
          std::cout << "  max_n S(n," << link.from << ") = " << Format(link.max_tail)
                    << " < exp(-0.45*" << link.to << "^2) = " << Format(link.bound)
                    << (link.holds ? "  ok" : "  FAIL") << '\n';
          chain_ok = chain_ok && link.holds;
        }
        if (report.violations > 0 || !chain_ok) return 5;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
