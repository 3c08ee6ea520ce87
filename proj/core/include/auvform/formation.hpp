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

#include <vector>

#include "auvform/types.hpp"
#include "auvform/vehicle_model.hpp"

namespace auvform {

enum class TrajectoryKind { kSpiral, kLine, kWaypoints };

/// Leader path. Spiral: centre + (R cos wt, R sin wt, vz t). Line: start +
/// velocity t. Waypoints: piecewise linear at constant speed.
struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::kSpiral;
  double duration = 120.0;  // [s]

  Vector3 center = Vector3(40.0, 40.0, -2.0);  // spiral centre at t = 0 [m]
  double radius = 15.0;                         // [m]
  double angular_rate = 0.02;                   // [rad/s]
  double vertical_rate = -0.05;                 // [m/s]

  Vector3 start = Vector3::Zero();     // line start [m]
  Vector3 velocity = Vector3::Zero();  // line velocity [m/s]
  double yaw = 0.0;                    // heading used when the line is at rest

  std::vector<Vector3> waypoints;  // [m]
  double speed = 0.3;              // [m/s]

  void validate() const;
};

/// Desired pose, pose rate and pose acceleration, inertial frame.
struct Reference {
  Vector6 pose = Vector6::Zero();
  Vector6 rate = Vector6::Zero();
  Vector6 accel = Vector6::Zero();
};

/// Throws ConfigError if t lies outside [0, duration].
Reference leader_reference(double t, const TrajectorySpec& spec);

/// One follower slot: displacement in the leader's yaw-rotated frame plus a
/// relative heading.
struct FormationSlot {
  Vector3 offset = Vector3::Zero();  // [m]
  double yaw_offset = 0.0;           // [rad]
};

struct FormationSpec {
  /// Default triangle behind the leader.
  std::vector<FormationSlot> followers{{Vector3(-2.0, 1.5, 0.0), 0.0},
                                       {Vector3(-2.0, -1.5, 0.0), 0.0}};
  void validate() const;
};

/// e_d = leader position + Rz(leader yaw) offset, e_dot_d by the chain rule
/// through the leader's yaw rate. The returned accel is left zero.
Reference follower_reference(const VehicleState& leader,
                             const Vector6& leader_rates,
                             const FormationSlot& slot);

struct TrackingError {
  Vector6 eps = Vector6::Zero();
  Vector6 eps_dot = Vector6::Zero();
};

/// eps = e - e_d (angles wrapped), eps_dot = e_dot - e_dot_d, per vehicle.
std::vector<TrackingError> formation_error(
    const std::vector<VehicleState>& states, const std::vector<Reference>& refs);

TrackingError tracking_error(const VehicleState& state, const Reference& ref);

}  // namespace auvform
