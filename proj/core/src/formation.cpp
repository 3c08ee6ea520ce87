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

#include "auvform/formation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace auvform {

void TrajectorySpec::validate() const {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw ConfigError("trajectory duration must be finite and > 0");
  }
  switch (kind) {
    case TrajectoryKind::kSpiral:
      if (!(radius > 0.0)) throw ConfigError("spiral radius must be > 0");
      if (!std::isfinite(angular_rate) || !std::isfinite(vertical_rate) ||
          !center.allFinite()) {
        throw ConfigError("spiral rates and centre must be finite");
      }
      break;
    case TrajectoryKind::kLine:
      if (!start.allFinite() || !velocity.allFinite()) {
        throw ConfigError("line start and velocity must be finite");
      }
      break;
    case TrajectoryKind::kWaypoints:
      if (waypoints.size() < 2) throw ConfigError("waypoint path needs >= 2 points");
      if (!(speed >= 0.0)) throw ConfigError("waypoint speed must be >= 0");
      break;
  }
}

Reference leader_reference(double t, const TrajectorySpec& spec) {
  if (!(t >= -1e-9 && t <= spec.duration + 1e-9)) {
    throw ConfigError("reference time " + std::to_string(t) +
                      " outside [0, duration]");
  }
  Reference ref;
  switch (spec.kind) {
    case TrajectoryKind::kSpiral: {
      const double r = spec.radius, w = spec.angular_rate;
      const double c = std::cos(w * t), s = std::sin(w * t);
      ref.pose << spec.center.x() + r * c, spec.center.y() + r * s,
          spec.center.z() + spec.vertical_rate * t, 0.0, 0.0,
          wrap_angle(w * t + (w >= 0.0 ? 1.0 : -1.0) * std::numbers::pi / 2);
      ref.rate << -r * w * s, r * w * c, spec.vertical_rate, 0.0, 0.0, w;
      ref.accel << -r * w * w * c, -r * w * w * s, 0.0, 0.0, 0.0, 0.0;
      break;
    }
    case TrajectoryKind::kLine: {
      const Vector3 p = spec.start + spec.velocity * t;
      const double horiz = spec.velocity.head<2>().norm();
      const double yaw =
          horiz > 0.0 ? std::atan2(spec.velocity.y(), spec.velocity.x()) : spec.yaw;
      ref.pose << p, 0.0, 0.0, wrap_angle(yaw);
      ref.rate << spec.velocity, 0.0, 0.0, 0.0;
      break;
    }
    case TrajectoryKind::kWaypoints: {
      double remaining = spec.speed * t;
      const auto& wp = spec.waypoints;
      for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
        const Vector3 seg = wp[i + 1] - wp[i];
        const double len = seg.norm();
        const bool last = i + 2 == wp.size();
        if (remaining <= len || last) {
          const Vector3 dir = len > 0.0 ? Vector3(seg / len) : Vector3::Zero();
          const double along = std::min(remaining, len);
          const double yaw = seg.head<2>().norm() > 0.0
                                 ? std::atan2(seg.y(), seg.x())
                                 : spec.yaw;
          ref.pose << wp[i] + dir * along, 0.0, 0.0, wrap_angle(yaw);
          if (remaining < len) ref.rate.head<3>() = dir * spec.speed;
          break;
        }
        remaining -= len;
      }
      break;
    }
  }
  return ref;
}

void FormationSpec::validate() const {
  for (std::size_t i = 0; i < followers.size(); ++i) {
    if (!followers[i].offset.allFinite()) {
      throw ConfigError("formation offsets must be finite");
    }
    if (followers[i].offset.norm() == 0.0) {
      throw ConfigError("follower " + std::to_string(i) +
                        " shares the leader's slot");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((followers[i].offset - followers[j].offset).norm() == 0.0) {
        throw ConfigError("followers " + std::to_string(j) + " and " +
                          std::to_string(i) + " share a formation slot");
      }
    }
  }
}

Reference follower_reference(const VehicleState& leader,
                             const Vector6& leader_rates,
                             const FormationSlot& slot) {
  if (!(std::abs(leader.euler.y()) < std::numbers::pi / 2 - kPitchSingularityTol)) {
    throw SingularityError("leader pitch at the Euler-angle singularity");
  }
  const double psi = leader.euler.z();
  const double psi_dot = leader_rates(kYaw);
  const double c = std::cos(psi), s = std::sin(psi);
  const Vector3& o = slot.offset;
  const Vector3 rotated(c * o.x() - s * o.y(), s * o.x() + c * o.y(), o.z());
  // d/dt Rz(psi) o = psi_dot * (-s ox - c oy, c ox - s oy, 0)
  const Vector3 rotated_dot(psi_dot * (-s * o.x() - c * o.y()),
                            psi_dot * (c * o.x() - s * o.y()), 0.0);

  Reference ref;
  ref.pose << leader.position + rotated, 0.0, 0.0,
      wrap_angle(psi + slot.yaw_offset);
  ref.rate << leader_rates.head<3>() + rotated_dot, 0.0, 0.0, psi_dot;
  return ref;
}

TrackingError tracking_error(const VehicleState& state, const Reference& ref) {
  TrackingError err;
  err.eps = state.pose() - ref.pose;
  for (int i = kRoll; i <= kYaw; ++i) err.eps(i) = wrap_angle(err.eps(i));
  err.eps_dot = pose_rate(state) - ref.rate;
  return err;
}

std::vector<TrackingError> formation_error(
    const std::vector<VehicleState>& states, const std::vector<Reference>& refs) {
  if (states.size() != refs.size()) {
    throw ConfigError("formation_error: " + std::to_string(states.size()) +
                      " states but " + std::to_string(refs.size()) + " references");
  }
  std::vector<TrackingError> out;
  out.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    out.push_back(tracking_error(states[i], refs[i]));
  }
  return out;
}

}  // namespace auvform
