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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auvform/flow_field.hpp"
#include "auvform/formation.hpp"
#include "auvform/integrator.hpp"
#include "auvform/mpc_shell.hpp"
#include "auvform/smc_controller.hpp"
#include "auvform/thruster_allocation.hpp"
#include "auvform/vehicle_model.hpp"

namespace auvform {

struct VehicleSpec {
  VehicleState initial;
  RigidBodyParams params = RigidBodyParams::small_auv();
  ThrusterConfig thrusters;
};

struct SimConfig {
  double dt = 0.01;          // [s]
  double duration = 120.0;   // [s]
  std::uint64_t seed = 1;
  double convergence_threshold = 0.1;  // [m]
  Vector3 workspace_min = Vector3(0.0, 0.0, -20.0);  // [m]
  Vector3 workspace_max = Vector3(80.0, 80.0, 0.0);  // [m]

  /// Number of integration steps, duration / dt rounded to the nearest int.
  std::size_t steps() const;
};

/// Everything needed to reproduce a run. vehicles[0] is the leader, the rest
/// follow formation.followers in order.
struct Scenario {
  std::vector<VehicleSpec> vehicles;
  ControllerConfig controller;
  MpcConfig mpc;
  bool baseline = false;  // run the first-order law without the MPC shell
  bool flow_enabled = true;
  /// Apply the commanded body wrench directly instead of going through the
  /// thruster model. For controller studies only.
  bool ideal_actuation = false;
  FlowParams flow;
  LayeredField layers;
  DisturbanceModel disturbance;
  TrajectorySpec trajectory;
  FormationSpec formation;
  SimConfig sim;

  /// Throws ConfigError naming the violated invariant.
  void validate() const;
};

/// Shift applied to every vehicle's default start so the run begins off
/// the formation.
inline const Vector3 kDefaultStartOffset{0.8, -0.6, 0.4};

/// Leader on its reference pose at t = 0, followers on their slots, all
/// shifted by `offset` and at rest.
std::vector<VehicleState> default_initial_states(const TrajectorySpec& traj,
                                                 const FormationSpec& formation,
                                                 const Vector3& offset);

/// Three-vehicle triangle on the default spiral, each vehicle starting about
/// a metre off its slot.
Scenario default_spiral_scenario();

/// Current at a point: the layered jet inside the workspace box, zero
/// outside it or when flow is disabled.
Vector3 current_at(const Scenario& s, const Vector3& position, double t);

/// The same scenario driven by the first-order baseline with the MPC shell
/// switched off.
Scenario baseline_variant(const Scenario& s);

/// Per-vehicle log entry. Values are taken at the record time; the commands
/// are those held over the following step.
struct VehicleRecord {
  VehicleState state;
  Vector6 eps = Vector6::Zero();
  Vector6 eps_dot = Vector6::Zero();
  Vector6 sigma = Vector6::Zero();
  Vector6 u1 = Vector6::Zero();         // body
  Vector6 u2 = Vector6::Zero();         // body
  Vector6 u_command = Vector6::Zero();  // body, after the MPC shell
  Vector3 thrust = Vector3::Zero();     // allocated thruster forces [N]
  Vector6 u_applied = Vector6::Zero();  // body, B_t thrust
  Vector5 residual = Vector5::Zero();   // allocation shortfall
  Vector6 feedback = Vector6::Zero();   // inertial command minus feedforward
  Vector6 f_est = Vector6::Zero();
  Vector6 f_tilde = Vector6::Zero();    // true lumped uncertainty
  double lyapunov = 0.0;
  bool assumption = false;
  bool mpc_feasible = true;
  Vector3 flow = Vector3::Zero();         // current at the vehicle [m/s]
  Vector6 disturbance = Vector6::Zero();  // inertial
};

struct StepRecord {
  double t = 0.0;
  std::vector<VehicleRecord> vehicles;
};

struct SimLog {
  std::vector<StepRecord> records;
  bool aborted = false;
  std::string abort_reason;
};

struct VehicleRuntime {
  VehicleState state;
  ControllerState controller;
  ControlOutput held;            // last computed law output
  Vector6 command = Vector6::Zero();
  ControlSequence mpc_plan;      // remaining planned commands
  Vector6 prev_rate_d = Vector6::Zero();
  Vector6 prev_f_tilde = Vector6::Zero();
  bool has_prev = false;
};

/// Mutable state of a run.
class SimRuntime {
 public:
  explicit SimRuntime(const Scenario& scenario);
  SimRuntime(const SimRuntime&) = delete;
  SimRuntime& operator=(const SimRuntime&) = delete;

  /// Computes the commands at the current time, returns the record for it
  /// and, if `advance`, integrates one step. Throws SingularityError or
  /// RuntimeAbort on a bad state.
  StepRecord step(bool advance = true);

  double time() const { return t_; }
  std::size_t step_index() const { return k_; }
  const std::vector<VehicleRuntime>& vehicles() const { return vehicles_; }

 private:
  VehicleRecord control_vehicle(std::size_t i, const Reference& ref);

  Scenario scenario_;
  std::vector<VehicleDynamics> plants_;
  std::vector<VehicleDynamics> models_;
  std::vector<ThrusterAllocator> allocators_;
  std::vector<VehicleRuntime> vehicles_;
  std::vector<DisturbanceFn> disturbances_;
  double t_ = 0.0;
  std::size_t k_ = 0;
  std::uint64_t solves_ = 0;
};

/// Runs the whole scenario: steps() + 1 records. A singular or non-finite
/// state stops the run; the log then ends at the last good record and
/// carries the reason.
SimLog run(const Scenario& scenario);

}  // namespace auvform
