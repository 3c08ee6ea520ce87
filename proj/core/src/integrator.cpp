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

#include "auvform/integrator.hpp"

namespace auvform {

VehicleDynamics::VehicleDynamics(const RigidBodyParams& params)
    : params_(params), inertia_ldlt_(params.inertia) {
  params_.validate();
}

Vector12 VehicleDynamics::derivative(const VehicleState& state,
                                     const Wrench6& tau,
                                     const Wrench6& tau_c) const {
  if (tau.frame != Frame::kBody || tau_c.frame != Frame::kBody) {
    throw FrameError("vehicle dynamics expect body-frame wrenches");
  }
  const Vector6 q = state.velocity();
  const Vector6 rhs = tau.value - tau_c.value - params_.coriolis(q) * q -
                      params_.damping(q) * q - params_.restoring(state.euler);
  Vector12 d;
  d.head<6>() = pose_rate(state);
  d.tail<6>() = inertia_ldlt_.solve(rhs);
  return d;
}

VehicleState VehicleDynamics::step(const VehicleState& state,
                                   const Wrench6& tau,
                                   const DisturbanceFn& disturbance, double t,
                                   double dt) const {
  auto f = [&](double ts, const Vector12& x) -> Vector12 {
    const VehicleState s = VehicleState::from_vector(x);
    const Wrench6 tau_c =
        disturbance ? disturbance(ts, s) : Wrench6::body(Vector6::Zero());
    return derivative(s, tau, tau_c);
  };
  VehicleState next = VehicleState::from_vector(rk4_step(f, state.to_vector(), t, dt));
  next.normalize_angles();
  return next;
}

}  // namespace auvform
