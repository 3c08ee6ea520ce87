// Copyright 2026 The auvform Authors
//
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

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "auvform/compare.hpp"
#include "auvform/export.hpp"
#include "auvform/metrics.hpp"
#include "auvform/scenario_io.hpp"
#include "auvform/sim_engine.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kAborted = 2;

void print_table(const auvform::AxisTable& t) {
  std::printf("%-5s %31s   %31s\n", "", "speed error [m/s]", "position error [m]");
  std::printf("%-5s %9s %10s %10s   %9s %10s %10s\n", "axis", "min", "max", "RMSE",
              "min", "max", "RMSE");
  const char* axes[] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a) {
    const auto& m = t[a];
    std::printf("%-5s %9.4f %10.4f %10.4f   %9.4f %10.4f %10.4f\n", axes[a],
                m.speed_min, m.speed_max, m.speed_rmse, m.position_min,
                m.position_max, m.position_rmse);
  }
}

std::vector<double> parse_times(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw auvform::ConfigError("--t: '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw auvform::ConfigError("--t needs at least one time");
  return out;
}

int cmd_run(const std::string& path, const std::string& out, const long long* seed,
            const double* dt) {
  auvform::Scenario s = auvform::parse_scenario(path);
  if (seed) s.sim.seed = static_cast<std::uint64_t>(*seed);
  if (dt) s.sim.dt = *dt;
  s.validate();

  const auvform::SimLog log = auvform::run(s);
  std::optional<auvform::Metrics> metrics;
  const auto tc = auvform::detect_convergence(log, s.sim.convergence_threshold);
  if (tc && !log.aborted) {
    metrics = auvform::compute_metrics(log, *tc);
    metrics->convergence_time = tc;
  }
  auvform::export_results(log, metrics, out);

  if (log.aborted) {
    std::cerr << "run aborted: " << log.abort_reason << '\n';
    return kAborted;
  }
  if (metrics) {
    std::printf("convergence time: %.2f s\n", *tc);
    print_table(metrics->formation);
  } else {
    std::printf("formation did not converge below %.3f m\n", s.sim.convergence_threshold);
  }
  return kOk;
}

int cmd_compare(const std::string& path, const std::string& out) {
  const auvform::Scenario s = auvform::parse_scenario(path);
  const auvform::CompareResult r = auvform::compare_runs(s);
  auvform::export_compare(r, out);
  std::printf("scored from t = %.2f s\n", r.window_start);
  std::printf("proposed:\n");
  print_table(r.proposed_metrics.formation);
  std::printf("first-order baseline:\n");
  print_table(r.baseline_metrics.formation);
  std::printf("position RMSE ratio x %.3f  y %.3f  z %.3f\n", r.position_rmse_ratio[0],
              r.position_rmse_ratio[1], r.position_rmse_ratio[2]);
  std::printf("chatter (x+y sign flips): proposed %zu, baseline %zu\n",
              r.proposed_chatter, r.baseline_chatter);
  return kOk;
}

int cmd_flow_grid(const std::string& path, const std::string& out,
                  const std::string& times) {
  const auvform::Scenario s = auvform::parse_scenario(path);
  const std::vector<double> t = times.empty() ? std::vector<double>{0.0} : parse_times(times);
  auvform::export_flow_grid(s.flow, s.layers, t, s.sim.workspace_min, s.sim.workspace_max,
                            out);
  return kOk;
}

int cmd_validate(const std::string& path) {
  const auvform::Scenario s = auvform::parse_scenario(path);
  std::printf("%s: ok (%zu vehicles, %zu steps, controller %s, mpc %s)\n", path.c_str(),
              s.vehicles.size(), s.sim.steps(),
              auvform::to_string(s.baseline ? auvform::ControllerKind::kFirstOrder
                                             : s.controller.kind)
                  .c_str(),
              s.mpc.enabled && !s.baseline ? "on" : "off");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"auvform: AUV formation simulator"};
  app.require_subcommand(1);

  std::string scenario, out, times;
  long long seed = 0;
  double dt = 0.0;

  auto* run = app.add_subcommand("run", "simulate a scenario and export its tables");
  run->add_option("scenario", scenario, "scenario file")->required();
  run->add_option("-o,--out", out, "output directory")->required();
  auto* seed_opt = run->add_option("--seed", seed, "seed override")->check(CLI::NonNegativeNumber);
  auto* dt_opt = run->add_option("--dt", dt, "time step override [s]");

  auto* cmp = app.add_subcommand("compare", "run the scenario against the first-order baseline");
  cmp->add_option("scenario", scenario, "scenario file")->required();
  cmp->add_option("-o,--out", out, "output directory")->required();

  auto* grid = app.add_subcommand("flow-grid", "sample the current on a 1 m grid");
  grid->add_option("scenario", scenario, "scenario file")->required();
  grid->add_option("-o,--out", out, "output CSV file")->required();
  grid->add_option("--t", times, "comma-separated sample times [s], default 0");

  auto* val = app.add_subcommand("validate", "parse and check a scenario");
  val->add_option("scenario", scenario, "scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*run) {
      return cmd_run(scenario, out, seed_opt->count() ? &seed : nullptr,
                     dt_opt->count() ? &dt : nullptr);
    }
    if (*cmp) return cmd_compare(scenario, out);
    if (*grid) return cmd_flow_grid(scenario, out, times);
    if (*val) return cmd_validate(scenario);
  } catch (const auvform::ConfigError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kInvalid;
  } catch (const auvform::FrameError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return kAborted;
  }
  return kInvalid;
}
