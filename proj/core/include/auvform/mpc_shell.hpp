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
#include <vector>

#include "auvform/integrator.hpp"
#include "auvform/types.hpp"
#include "auvform/vehicle_model.hpp"

namespace auvform {

/// How the control-smoothing term of the cost is formed.
enum class SmoothingMode {
  /// sum_{k=1..Ne} sum_{i=1..Nu} |u(k) - u(k+i)|^2, pairs counted as written.
  kPairwise,
  /// sum_k |u(k) - u(k-1)|^2 over the whole sequence.
  kDeltaU,
};

struct MpcConfig {
  bool enabled = true;
  int n_e = 5;  // prediction horizon [steps]
  int n_u = 2;  // control-smoothing horizon [steps]
  Vector6 tau_lower = Vector6::Constant(-60.0);
  Vector6 tau_upper = Vector6::Constant(60.0);
  Vector6 state_lower = Vector6::Constant(-5.0);  // pose error bounds
  Vector6 state_upper = Vector6::Constant(5.0);
  int candidate_count = 32;
  int rounds = 3;
  /// Half-width of the first round's sampled perturbations [N, N m]; each
  /// later round halves it.
  double perturbation = 2.0;
  int stride = 1;  // solve every n-th controller update, hold otherwise
  std::uint64_t seed = 1;
  SmoothingMode smoothing = SmoothingMode::kPairwise;

  /// Length of a control sequence: n_e + n_u.
  int sequence_length() const { return n_e + n_u; }
  void validate() const;
};

using ControlSequence = std::vector<Vector6>;

struct MpcSolution {
  ControlSequence sequence;
  double cost = 0.0;
  bool feasible = true;
};

struct Prediction {
  std::vector<VehicleState> states;  // after each applied control
  std::vector<Vector6> rates;        // e_dot after each applied control
};

/// Forward-simulates n_e RK4 steps of the given model, applying controls[k]
/// (body frame) on step k. Deterministic.
Prediction predict_rollout(const VehicleState& state,
                           const ControlSequence& controls,
                           const DisturbanceFn& disturbance,
                           const VehicleDynamics& model, int n_e, double t0,
                           double dt);

/// Tracking plus smoothing cost. predicted and desired need n_e entries,
/// controls n_e + n_u; anything else throws ConfigError.
double mpc_cost(const std::vector<Vector6>& predicted,
                const std::vector<Vector6>& desired,
                const ControlSequence& controls, const MpcConfig& cfg);

/// Desired pose and velocity target over the horizon.
struct MpcTarget {
  std::vector<Vector6> pose;  // n_e entries
  std::vector<Vector6> rate;  // n_e entries
};

/// Clips every element of a sequence to the control bounds.
ControlSequence clip_sequence(const ControlSequence& seq, const MpcConfig& cfg);

/// Sampling/coordinate-descent search around the clipped nominal sequence.
/// Never returns a sequence costlier than the clipped nominal; prefers
/// sequences whose predicted pose error stays inside the state bounds.
/// `solve_index` decorrelates the seeded sampling between solves.
MpcSolution mpc_optimize(const VehicleState& state, const MpcTarget& target,
                         const ControlSequence& smc_nominal,
                         const VehicleDynamics& model,
                         const DisturbanceFn& disturbance,
                         const MpcConfig& cfg, double t0, double dt,
                         std::uint64_t solve_index = 0);

}  // namespace auvform
