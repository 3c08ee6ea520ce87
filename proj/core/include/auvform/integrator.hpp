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

#include <functional>

#include "auvform/vehicle_model.hpp"

namespace auvform {

/// Classic fourth-order Runge-Kutta step for x_dot = f(t, x).
template <typename Vec, typename F>
Vec rk4_step(F&& f, const Vec& x, double t, double dt) {
  const Vec k1 = f(t, x);
  const Vec k2 = f(t + 0.5 * dt, Vec(x + 0.5 * dt * k1));
  const Vec k3 = f(t + 0.5 * dt, Vec(x + 0.5 * dt * k2));
  const Vec k4 = f(t + dt, Vec(x + dt * k3));
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Body-frame tau_c seen by a vehicle at time t in the given state.
using DisturbanceFn = std::function<Wrench6(double, const VehicleState&)>;

/// Rigid-body dynamics with the inertia factorisation cached. Use this in
/// inner loops; dynamics_body re-factorises every call.
class VehicleDynamics {
 public:
  explicit VehicleDynamics(const RigidBodyParams& params);

  Vector12 derivative(const VehicleState& state, const Wrench6& tau,
                      const Wrench6& tau_c) const;

  /// One RK4 step with tau held constant (zero-order hold) and the
  /// disturbance re-evaluated at every stage. Angles are wrapped afterwards.
  VehicleState step(const VehicleState& state, const Wrench6& tau,
                    const DisturbanceFn& disturbance, double t, double dt) const;

  const RigidBodyParams& params() const { return params_; }

 private:
  RigidBodyParams params_;
  Eigen::LDLT<Matrix6> inertia_ldlt_;
};

}  // namespace auvform
