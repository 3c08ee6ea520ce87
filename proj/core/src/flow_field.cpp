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

#include "auvform/flow_field.hpp"

#include <algorithm>
#include <cmath>

namespace auvform {

double FlowParams::amplitude(double t) const {
  return b0 + e_amp * std::cos(omega * t + theta0);
}

void FlowParams::validate() const {
  for (double v : {b0, e_amp, omega, theta0, c, k}) {
    if (!std::isfinite(v)) throw ConfigError("flow parameters must be finite");
  }
  if (k == 0.0) throw ConfigError("flow wavenumber k must be non-zero");
}

double stream_function(double x, double y, double t, const FlowParams& p) {
  const double b = p.amplitude(t);
  const double xi = p.k * (x - p.c * t);
  const double s = std::sin(xi);
  const double den = std::sqrt(1.0 + p.k * p.k * b * b * s * s);
  return 1.0 - std::tanh((y - b * std::cos(xi)) / den);
}

FlowVelocity2 flow_velocity(double x, double y, double t, const FlowParams& p) {
  const double b = p.amplitude(t);
  const double xi = p.k * (x - p.c * t);
  const double s = std::sin(xi);
  const double co = std::cos(xi);
  const double k2b2 = p.k * p.k * b * b;
  const double den = std::sqrt(1.0 + k2b2 * s * s);
  const double num = y - b * co;
  const double a = num / den;
  const double ch = std::cosh(a);
  const double sech2 = 1.0 / (ch * ch);

  const double dnum_dx = b * p.k * s;
  const double dden_dx = k2b2 * p.k * s * co / den;
  const double da_dx = (dnum_dx * den - num * dden_dx) / (den * den);
  const double da_dy = 1.0 / den;

  // dC/da = -sech^2(a)
  return {sech2 * da_dy, -sech2 * da_dx};
}

int LayeredField::layer_of(double z) const {
  if (!(z >= z_min && z <= z_max)) return -1;
  const double thickness = (z_max - z_min) / n_layers;
  const int idx = static_cast<int>(std::floor((z_max - z) / thickness));
  return std::clamp(idx, 0, n_layers - 1);
}

void LayeredField::validate() const {
  if (n_layers < 1) throw ConfigError("flow needs at least one layer");
  if (!(z_min < z_max)) throw ConfigError("flow depth interval must satisfy z_min < z_max");
  if (static_cast<int>(layer_scale.size()) != n_layers) {
    throw ConfigError("layer_scale must have one entry per layer");
  }
  for (double s : layer_scale) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw ConfigError("layer scales must be finite and >= 0");
  }
  if (!(speed_cap >= 0.0)) throw ConfigError("speed_cap must be >= 0");
  if (!(speed_scale >= 0.0)) throw ConfigError("speed_scale must be >= 0");
  if (!(length_scale > 0.0)) throw ConfigError("length_scale must be > 0");
}

Vector3 layered_velocity(double x, double y, double z, double t,
                         const LayeredField& field, const FlowParams& p) {
  const int layer = field.layer_of(z);
  if (layer < 0) return Vector3::Zero();
  const FlowVelocity2 raw =
      flow_velocity((x - field.origin_x) / field.length_scale,
                    (y - field.origin_y) / field.length_scale, t, p);
  const double s = field.speed_scale * field.layer_scale[layer];
  Vector3 v(s * raw.u, s * raw.v, 0.0);
  const double speed = v.norm();
  if (speed > field.speed_cap) v *= field.speed_cap / speed;
  return v;
}

void DisturbanceModel::validate() const {
  if (!(drag_gain >= 0.0) || !(yaw_gain >= 0.0)) {
    throw ConfigError("disturbance gains must be >= 0");
  }
  if (!(force_clamp >= 0.0)) throw ConfigError("force_clamp must be >= 0");
}

Wrench6 disturbance_wrench(const Vector3& flow_vel, const VehicleState& state,
                           const DisturbanceModel& model) {
  const Matrix3 r = rotation_matrix(state.euler);
  const Vector3 vehicle_vel = r * state.linear_velocity;
  Vector3 rel = flow_vel - vehicle_vel;
  rel.z() = 0.0;  // horizontal current only
  const double speed = rel.norm();
  const double lim = model.force_clamp;

  Vector6 d = Vector6::Zero();
  d(kX) = std::clamp(model.drag_gain * speed * rel.x(), -lim, lim);
  d(kY) = std::clamp(model.drag_gain * speed * rel.y(), -lim, lim);
  const double lateral = (r.transpose() * rel).y();
  d(kYaw) = std::clamp(model.yaw_gain * lateral, -lim, lim);
  return Wrench6::inertial(d);
}

Wrench6 disturbance_to_tau_c(const Wrench6& disturbance,
                             const VehicleState& state) {
  if (disturbance.frame != Frame::kInertial) {
    throw FrameError("disturbance must be an inertial-frame wrench");
  }
  return Wrench6::body(-kinematic_transform(state).full.transpose() *
                       disturbance.value);
}

}  // namespace auvform
