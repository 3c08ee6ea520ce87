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

#include "auvform/types.hpp"

namespace auvform {

using ThrusterMatrix = Eigen::Matrix<double, 5, 3>;

/// Equivalent three-thruster model of a finned single-propeller AUV: two
/// horizontal thrusters sharing surge/sway/yaw/pitch and one heave thruster.
struct ThrusterConfig {
  double k1 = 0.6, k2 = 0.6;  // share coefficients, [0.2, 1]
  double k3 = 1.0;            // heave coefficient, [-1, 1]
  double l1 = 0.65, l2 = 0.65;  // [0.3, 1]
  double t1 = 0.5, t2 = 0.5;    // [0, 1]
  double t3 = 0.25, t4 = 0.25;  // [-0.5, 0.5]
  double r1 = 0.15, r2 = 0.15;  // yaw moment arms [m]
  double r3 = 0.4;              // pitch moment arm [m]
  double u_limit = 60.0;        // per-thruster bound [N]

  /// Throws ConfigError naming the first coefficient outside its interval.
  void validate() const;
};

/// Decoupled control wrench without roll, ordered (surge, sway, yaw, heave,
/// pitch) to pair with the pose (x, y, psi, z, theta).
struct Wrench5 {
  Vector5 values = Vector5::Zero();

  double tau_u() const { return values(0); }
  double tau_v() const { return values(1); }
  double tau_r() const { return values(2); }
  double tau_w() const { return values(3); }
  double tau_q() const { return values(4); }

  /// Drops roll from a body-frame 6-vector (X Y Z K M N order).
  static Wrench5 from_body6(const Vector6& w);
  /// Back to X Y Z K M N order with K = 0.
  Vector6 to_body6() const;
};

ThrusterMatrix build_tcm(const ThrusterConfig& cfg);

/// tau = B_t u_t. Throws ConfigError if any |u_t,i| exceeds u_limit.
Wrench5 wrench_from_thrust(const Vector3& u_t, const ThrusterConfig& cfg);

struct AllocationResult {
  Vector3 thrust = Vector3::Zero();
  /// Requested minus achieved wrench.
  Vector5 residual = Vector5::Zero();
  bool saturated = false;
};

/// Least-squares allocation with saturation: pseudo-inverse, clip, then one
/// re-projection of the remaining demand onto the unsaturated thrusters.
class ThrusterAllocator {
 public:
  explicit ThrusterAllocator(const ThrusterConfig& cfg);

  AllocationResult allocate(const Wrench5& tau) const;
  const ThrusterMatrix& tcm() const { return tcm_; }
  const ThrusterConfig& config() const { return cfg_; }

 private:
  ThrusterConfig cfg_;
  ThrusterMatrix tcm_;
  Eigen::Matrix<double, 3, 5> pinv_;
};

AllocationResult allocate(const Wrench5& tau, const ThrusterConfig& cfg);

}  // namespace auvform
