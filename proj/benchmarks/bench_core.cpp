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

#include <benchmark/benchmark.h>

#include "auvform/flow_field.hpp"
#include "auvform/integrator.hpp"
#include "auvform/mpc_shell.hpp"
#include "auvform/sim_engine.hpp"
#include "auvform/thruster_allocation.hpp"

namespace {

using namespace auvform;

void BM_FlowVelocity(benchmark::State& st) {
  const FlowParams p;
  const LayeredField layers;
  double t = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(layered_velocity(12.0, 41.0, -3.0, t, layers, p));
    t += 0.01;
  }
}
BENCHMARK(BM_FlowVelocity);

void BM_Allocate(benchmark::State& st) {
  const ThrusterAllocator alloc{ThrusterConfig{}};
  Wrench5 tau;
  tau.values << 20.0, 3.0, 1.5, -8.0, 0.7;
  for (auto _ : st) benchmark::DoNotOptimize(alloc.allocate(tau));
}
BENCHMARK(BM_Allocate);

void BM_VehicleStep(benchmark::State& st) {
  const VehicleDynamics plant(RigidBodyParams::small_auv());
  VehicleState s;
  s.position = Vector3(10.0, 20.0, -3.0);
  s.linear_velocity = Vector3(0.3, 0.0, 0.0);
  Vector6 tau;
  tau << 5.0, 0.0, 1.0, 0.0, 0.2, -0.3;
  const DisturbanceFn none = [](double, const VehicleState&) {
    return Wrench6::body(Vector6::Zero());
  };
  for (auto _ : st) benchmark::DoNotOptimize(plant.step(s, Wrench6::body(tau), none, 0.0, 0.01));
}
BENCHMARK(BM_VehicleStep);

void BM_MpcOptimize(benchmark::State& st) {
  const VehicleDynamics model(RigidBodyParams::small_auv());
  const MpcConfig cfg;
  const double dt = 0.01;
  VehicleState s;
  s.position = Vector3(10.0, 20.0, -3.0);
  s.linear_velocity = Vector3(0.3, 0.0, 0.0);
  Vector6 c = Vector6::Zero();
  c(kX) = 4.0;
  const ControlSequence nominal(cfg.sequence_length(), c);
  MpcTarget target;
  Vector6 rate = Vector6::Zero();
  rate(kX) = 0.35;
  for (int k = 0; k < cfg.n_e; ++k) {
    target.pose.push_back(s.pose() + (k + 1) * dt * rate);
    target.rate.push_back(rate);
  }
  const DisturbanceFn none = [](double, const VehicleState&) {
    return Wrench6::body(Vector6::Zero());
  };
  for (auto _ : st) {
    benchmark::DoNotOptimize(mpc_optimize(s, target, nominal, model, none, cfg, 0.0, dt));
  }
}
BENCHMARK(BM_MpcOptimize);

void BM_SimulationSecond(benchmark::State& st) {
  Scenario s = default_spiral_scenario();
  s.sim.duration = 1.0;
  s.mpc.enabled = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(run(s));
}
BENCHMARK(BM_SimulationSecond)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
