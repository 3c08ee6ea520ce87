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

#include <numbers>
#include <vector>

#include "auvform/types.hpp"
#include "auvform/vehicle_model.hpp"

namespace auvform {

/// Meandering-jet stream function parameters. Coordinates fed to
/// stream_function / flow_velocity are dimensionless jet coordinates.
struct FlowParams {
  double b0 = 1.2;                        // jet amplitude base
  double e_amp = 0.3;                     // amplitude modulation
  double omega = 0.4;                     // modulation frequency [rad/s]
  double theta0 = std::numbers::pi / 2;   // modulation phase [rad]
  double c = 0.12;                        // phase speed
  double k = 0.82;                        // wavenumber

  double amplitude(double t) const;
  void validate() const;
};

struct FlowVelocity2 {
  double u = 0.0;
  double v = 0.0;
};

/// C(x, y, t) = 1 - tanh[(y - B cos(k(x - ct))) / sqrt(1 + k^2 B^2 sin^2(k(x - ct)))].
double stream_function(double x, double y, double t, const FlowParams& p);

/// U = -dC/dy, V = dC/dx, both analytic.
FlowVelocity2 flow_velocity(double x, double y, double t, const FlowParams& p);

/// Depth layering of the planar jet plus the map from workspace metres to
/// jet coordinates: jet = (workspace - origin) / length_scale.
struct LayeredField {
  int n_layers = 3;
  double z_min = -20.0;  // [m]
  double z_max = 0.0;    // [m]
  /// Speed multiplier per layer, top (surface) layer first. The default
  /// encodes |V1| = 2.4 |V2| = 4 |V3|.
  std::vector<double> layer_scale{1.0, 1.0 / 2.4, 1.0 / 4.0};
  /// m/s per unit of raw jet velocity; the raw peak is 1, so this is the
  /// surface-layer peak speed.
  double speed_scale = 0.5;
  double speed_cap = 0.5;  // [m/s]
  double origin_x = 0.0;   // [m]
  double origin_y = 40.0;  // [m]
  double length_scale = 5.0;  // [m per jet unit]

  /// Index of the layer containing z, or -1 outside [z_min, z_max].
  int layer_of(double z) const;
  void validate() const;
};

/// Horizontal current at a workspace point [m/s]; vertical component is 0.
/// Zero outside the depth interval.
Vector3 layered_velocity(double x, double y, double z, double t,
                         const LayeredField& field, const FlowParams& p);

struct DisturbanceModel {
  double drag_gain = 40.0;    // N per (m/s)^2
  double yaw_gain = 5.0;      // N m per m/s of body-lateral relative flow
  double force_clamp = 20.0;  // per-axis bound [N, N m]

  void validate() const;
};

/// Force the current exerts on the vehicle, inertial frame, laid out as
/// [C_x C_y 0 0 0 C_z]. Relative velocity is flow minus vehicle velocity.
Wrench6 disturbance_wrench(const Vector3& flow_vel, const VehicleState& state,
                           const DisturbanceModel& model);

/// Convert the inertial disturbance into the body-frame tau_c that enters
/// M q_dot = tau - tau_c - ... (tau_c = -J^T d).
Wrench6 disturbance_to_tau_c(const Wrench6& disturbance,
                             const VehicleState& state);

}  // namespace auvform
