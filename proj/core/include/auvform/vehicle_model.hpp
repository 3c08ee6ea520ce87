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

using Vector12 = Eigen::Matrix<double, 12, 1>;

/// Pose in the inertial frame and velocity in the body frame of one vehicle.
struct VehicleState {
  Vector3 position = Vector3::Zero();          // x y z [m], inertial
  Vector3 euler = Vector3::Zero();             // roll pitch yaw [rad]
  Vector3 linear_velocity = Vector3::Zero();   // u v w [m/s], body
  Vector3 angular_velocity = Vector3::Zero();  // p q r [rad/s], body

  Vector6 pose() const;
  Vector6 velocity() const;
  Vector12 to_vector() const;
  static VehicleState from_vector(const Vector12& v);
  static VehicleState from_pose(const Vector6& pose, const Vector6& velocity);

  bool is_finite() const;
  /// Roll and yaw wrapped to (-pi, pi]. Pitch is left alone; it may never
  /// reach +-pi/2 anyway.
  void normalize_angles();
};

enum class Frame { kBody, kInertial };

struct Wrench6 {
  Vector6 value = Vector6::Zero();  // X Y Z [N], K M N [N m]
  Frame frame = Frame::kBody;

  static Wrench6 body(const Vector6& v) { return {v, Frame::kBody}; }
  static Wrench6 inertial(const Vector6& v) { return {v, Frame::kInertial}; }
  Vector3 force() const { return value.head<3>(); }
  Vector3 moment() const { return value.tail<3>(); }
};

/// Rigid body plus hydrodynamic parameters.
///
/// D(q) = diag(linear_damping + quadratic_damping .* |q|). C(q) is the
/// skew-symmetric Coriolis/centripetal matrix built from the inertia matrix.
/// g(e) is computed from weight, buoyancy and the body-frame positions of
/// the centres of gravity and buoyancy, with the inertial z axis pointing up.
struct RigidBodyParams {
  Matrix6 inertia = Matrix6::Identity();
  Vector6 linear_damping = Vector6::Zero();
  Vector6 quadratic_damping = Vector6::Zero();
  double weight = 0.0;    // [N]
  double buoyancy = 0.0;  // [N]
  Vector3 center_of_gravity = Vector3::Zero();   // [m], body
  Vector3 center_of_buoyancy = Vector3::Zero();  // [m], body
  /// Scale applied to every coefficient to form the controller's model.
  double mismatch_factor = 1.0;

  /// Small AUV defaults: M = diag(30 30 30 1 5 5), d_l = 5, d_q = 10,
  /// neutrally buoyant with the centre of gravity 2 cm below buoyancy.
  static RigidBodyParams small_auv();

  /// Parameters the controller believes in: every coefficient scaled by
  /// mismatch_factor. The returned set has mismatch_factor = 1.
  RigidBodyParams estimated() const;

  Matrix6 damping(const Vector6& q) const;
  Matrix6 coriolis(const Vector6& q) const;
  Vector6 restoring(const Vector3& euler) const;

  /// Throws ConfigError if M is not symmetric positive definite, damping is
  /// negative or mismatch_factor is outside (0, 1].
  void validate() const;
};

/// Kinematic transform between body velocities and inertial pose rates:
/// e_dot = full * q with full = blockdiag(rot, ang).
struct JacobianSet {
  Matrix3 rot;   // body -> inertial rotation (rot * body_x is the heading)
  Matrix3 ang;   // body angular rates -> Euler angle rates
  Matrix6 full;
};

/// Pitch margin from +-pi/2 below which the Euler transform is rejected.
inline constexpr double kPitchSingularityTol = 1e-6;

/// Throws SingularityError when |pitch| >= pi/2 - kPitchSingularityTol.
JacobianSet kinematic_transform(const VehicleState& state);
/// Inverse of JacobianSet::full, computed in closed form.
Matrix6 jacobian_inverse(const VehicleState& state);
/// Time derivative of JacobianSet::full along the state's own motion.
Matrix6 jacobian_derivative(const VehicleState& state);

/// Rotation body -> inertial for the given Euler angles (ZYX convention).
Matrix3 rotation_matrix(const Vector3& euler);

/// q_dot = M^-1 (tau - tau_c - C(q) q - D(q) q - g(e)). Both wrenches must be
/// body-frame.
Vector6 dynamics_body(const VehicleState& state, const Wrench6& tau,
                      const Wrench6& tau_c, const RigidBodyParams& params);

/// Full state derivative (pose rates, body accelerations) for integration.
Vector12 state_derivative(const VehicleState& state, const Wrench6& tau,
                          const Wrench6& tau_c, const RigidBodyParams& params);

struct InertialDynamicsTerms {
  Matrix6 m_e;
  Matrix6 c_e;
  Matrix6 d_e;
  Vector6 g_e;
};

/// M_e = J^-T M J^-1, C_e = J^-T (C - M J^-1 J_dot) J^-1, D_e = J^-T D J^-1,
/// g_e = J^-T g.
InertialDynamicsTerms dynamics_inertial_terms(const VehicleState& state,
                                              const RigidBodyParams& params);

/// f_r = M_e e_ddot_r + C_e e_dot_r + D_e e_dot + g_e for the given model.
Vector6 reference_dynamics(const VehicleState& state, const Vector6& e_dot_r,
                           const Vector6& e_ddot_r,
                           const RigidBodyParams& params);

/// Same as reference_dynamics but with the controller's scaled model.
Vector6 estimated_dynamics(const VehicleState& state, const Vector6& e_dot_r,
                           const Vector6& e_ddot_r,
                           const RigidBodyParams& params);

/// Inertial pose rates e_dot = J(e) q.
Vector6 pose_rate(const VehicleState& state);

}  // namespace auvform
