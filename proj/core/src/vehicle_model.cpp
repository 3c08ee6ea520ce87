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

#include "auvform/vehicle_model.hpp"

#include <cmath>
#include <numbers>

namespace auvform {
namespace {

Matrix3 skew(const Vector3& a) {
  Matrix3 s;
  s << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
      -a.y(), a.x(), 0.0;
  return s;
}

void check_pitch(double theta) {
  if (!(std::abs(theta) < std::numbers::pi / 2.0 - kPitchSingularityTol)) {
    throw SingularityError("pitch " + std::to_string(theta) +
                           " rad is at the Euler-angle singularity");
  }
}

Matrix3 euler_rate_matrix(double phi, double theta) {
  const double sp = std::sin(phi), cp = std::cos(phi);
  const double ct = std::cos(theta), tt = std::tan(theta);
  Matrix3 t;
  t << 1.0, sp * tt, cp * tt,
       0.0, cp, -sp,
       0.0, sp / ct, cp / ct;
  return t;
}

Matrix3 euler_rate_matrix_inverse(double phi, double theta) {
  const double sp = std::sin(phi), cp = std::cos(phi);
  const double st = std::sin(theta), ct = std::cos(theta);
  Matrix3 t;
  t << 1.0, 0.0, -st,
       0.0, cp, ct * sp,
       0.0, -sp, ct * cp;
  return t;
}

Matrix6 block_diag(const Matrix3& a, const Matrix3& b) {
  Matrix6 m = Matrix6::Zero();
  m.topLeftCorner<3, 3>() = a;
  m.bottomRightCorner<3, 3>() = b;
  return m;
}

}  // namespace

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a + std::numbers::pi, two_pi);
  if (r <= 0.0) r += two_pi;
  return r - std::numbers::pi;
}

Vector6 VehicleState::pose() const {
  Vector6 p;
  p << position, euler;
  return p;
}

Vector6 VehicleState::velocity() const {
  Vector6 v;
  v << linear_velocity, angular_velocity;
  return v;
}

Vector12 VehicleState::to_vector() const {
  Vector12 v;
  v << position, euler, linear_velocity, angular_velocity;
  return v;
}

VehicleState VehicleState::from_vector(const Vector12& v) {
  VehicleState s;
  s.position = v.segment<3>(0);
  s.euler = v.segment<3>(3);
  s.linear_velocity = v.segment<3>(6);
  s.angular_velocity = v.segment<3>(9);
  return s;
}

VehicleState VehicleState::from_pose(const Vector6& pose,
                                     const Vector6& velocity) {
  VehicleState s;
  s.position = pose.head<3>();
  s.euler = pose.tail<3>();
  s.linear_velocity = velocity.head<3>();
  s.angular_velocity = velocity.tail<3>();
  return s;
}

bool VehicleState::is_finite() const { return to_vector().allFinite(); }

void VehicleState::normalize_angles() {
  euler.x() = wrap_angle(euler.x());
  euler.z() = wrap_angle(euler.z());
}

RigidBodyParams RigidBodyParams::small_auv() {
  RigidBodyParams p;
  Vector6 diag;
  diag << 30.0, 30.0, 30.0, 1.0, 5.0, 5.0;
  p.inertia = diag.asDiagonal();
  p.linear_damping.setConstant(5.0);
  p.quadratic_damping.setConstant(10.0);
  p.weight = 30.0 * 9.81;
  p.buoyancy = p.weight;
  p.center_of_gravity = Vector3(0.0, 0.0, -0.02);
  p.center_of_buoyancy = Vector3::Zero();
  p.mismatch_factor = 1.0;
  return p;
}

RigidBodyParams RigidBodyParams::estimated() const {
  RigidBodyParams p = *this;
  const double f = mismatch_factor;
  p.inertia *= f;
  p.linear_damping *= f;
  p.quadratic_damping *= f;
  p.weight *= f;
  p.buoyancy *= f;
  p.mismatch_factor = 1.0;
  return p;
}

Matrix6 RigidBodyParams::damping(const Vector6& q) const {
  Vector6 d = linear_damping + quadratic_damping.cwiseProduct(q.cwiseAbs());
  return d.asDiagonal();
}

Matrix6 RigidBodyParams::coriolis(const Vector6& q) const {
  const Vector3 v1 = q.head<3>();
  const Vector3 v2 = q.tail<3>();
  const Matrix6 m = 0.5 * (inertia + inertia.transpose());
  const Vector3 a = m.topLeftCorner<3, 3>() * v1 + m.topRightCorner<3, 3>() * v2;
  const Vector3 b =
      m.bottomLeftCorner<3, 3>() * v1 + m.bottomRightCorner<3, 3>() * v2;
  Matrix6 c = Matrix6::Zero();
  c.topRightCorner<3, 3>() = -skew(a);
  c.bottomLeftCorner<3, 3>() = -skew(a);
  c.bottomRightCorner<3, 3>() = -skew(b);
  return c;
}

Vector6 RigidBodyParams::restoring(const Vector3& euler) const {
  const Matrix3 rt = rotation_matrix(euler).transpose();
  const Vector3 f_g = rt * Vector3(0.0, 0.0, -weight);
  const Vector3 f_b = rt * Vector3(0.0, 0.0, buoyancy);
  Vector6 g;
  g.head<3>() = -(f_g + f_b);
  g.tail<3>() = -(center_of_gravity.cross(f_g) + center_of_buoyancy.cross(f_b));
  return g;
}

void RigidBodyParams::validate() const {
  if (!inertia.allFinite()) throw ConfigError("inertia has non-finite entries");
  if ((inertia - inertia.transpose()).norm() > 1e-9 * (1.0 + inertia.norm())) {
    throw ConfigError("inertia matrix must be symmetric");
  }
  Eigen::LLT<Matrix6> llt(inertia);
  if (llt.info() != Eigen::Success) {
    throw ConfigError("inertia matrix must be positive definite");
  }
  if ((linear_damping.array() < 0.0).any() ||
      (quadratic_damping.array() < 0.0).any()) {
    throw ConfigError("damping coefficients must be non-negative");
  }
  if (!(mismatch_factor > 0.0 && mismatch_factor <= 1.0)) {
    throw ConfigError("mismatch_factor must lie in (0, 1]");
  }
}

Matrix3 rotation_matrix(const Vector3& euler) {
  const double sp = std::sin(euler.x()), cp = std::cos(euler.x());
  const double st = std::sin(euler.y()), ct = std::cos(euler.y());
  const double ss = std::sin(euler.z()), cs = std::cos(euler.z());
  Matrix3 r;
  r << cs * ct, -ss * cp + cs * st * sp, ss * sp + cs * cp * st,
       ss * ct, cs * cp + sp * st * ss, -cs * sp + st * ss * cp,
       -st, ct * sp, ct * cp;
  return r;
}

JacobianSet kinematic_transform(const VehicleState& state) {
  check_pitch(state.euler.y());
  JacobianSet j;
  j.rot = rotation_matrix(state.euler);
  j.ang = euler_rate_matrix(state.euler.x(), state.euler.y());
  j.full = block_diag(j.rot, j.ang);
  return j;
}

Matrix6 jacobian_inverse(const VehicleState& state) {
  check_pitch(state.euler.y());
  return block_diag(rotation_matrix(state.euler).transpose(),
                    euler_rate_matrix_inverse(state.euler.x(), state.euler.y()));
}

Matrix6 jacobian_derivative(const VehicleState& state) {
  check_pitch(state.euler.y());
  const double phi = state.euler.x(), theta = state.euler.y();
  const Vector3& w = state.angular_velocity;
  const Matrix3 r = rotation_matrix(state.euler);
  const Matrix3 t = euler_rate_matrix(phi, theta);
  const Vector3 rates = t * w;

  const double sp = std::sin(phi), cp = std::cos(phi);
  const double st = std::sin(theta), ct = std::cos(theta), tt = std::tan(theta);
  const double ct2 = ct * ct;
  Matrix3 dt_dphi;
  dt_dphi << 0.0, cp * tt, -sp * tt,
             0.0, -sp, -cp,
             0.0, cp / ct, -sp / ct;
  Matrix3 dt_dtheta;
  dt_dtheta << 0.0, sp / ct2, cp / ct2,
               0.0, 0.0, 0.0,
               0.0, sp * st / ct2, cp * st / ct2;

  return block_diag(r * skew(w), dt_dphi * rates.x() + dt_dtheta * rates.y());
}

Vector6 pose_rate(const VehicleState& state) {
  return kinematic_transform(state).full * state.velocity();
}

Vector6 dynamics_body(const VehicleState& state, const Wrench6& tau,
                      const Wrench6& tau_c, const RigidBodyParams& params) {
  if (tau.frame != Frame::kBody || tau_c.frame != Frame::kBody) {
    throw FrameError("dynamics_body expects body-frame wrenches");
  }
  const Vector6 q = state.velocity();
  const Vector6 rhs = tau.value - tau_c.value - params.coriolis(q) * q -
                      params.damping(q) * q - params.restoring(state.euler);
  Eigen::LDLT<Matrix6> ldlt(params.inertia);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw ConfigError("inertia matrix is not invertible");
  }
  return ldlt.solve(rhs);
}

Vector12 state_derivative(const VehicleState& state, const Wrench6& tau,
                          const Wrench6& tau_c, const RigidBodyParams& params) {
  Vector12 d;
  d.head<6>() = pose_rate(state);
  d.tail<6>() = dynamics_body(state, tau, tau_c, params);
  return d;
}

InertialDynamicsTerms dynamics_inertial_terms(const VehicleState& state,
                                              const RigidBodyParams& params) {
  const Matrix6 j_inv = jacobian_inverse(state);
  const Matrix6 j_inv_t = j_inv.transpose();
  const Matrix6 j_dot = jacobian_derivative(state);
  const Vector6 q = state.velocity();
  InertialDynamicsTerms terms;
  terms.m_e = j_inv_t * params.inertia * j_inv;
  terms.c_e = j_inv_t * (params.coriolis(q) - params.inertia * j_inv * j_dot) * j_inv;
  terms.d_e = j_inv_t * params.damping(q) * j_inv;
  terms.g_e = j_inv_t * params.restoring(state.euler);
  return terms;
}

Vector6 reference_dynamics(const VehicleState& state, const Vector6& e_dot_r,
                           const Vector6& e_ddot_r,
                           const RigidBodyParams& params) {
  const InertialDynamicsTerms t = dynamics_inertial_terms(state, params);
  return t.m_e * e_ddot_r + t.c_e * e_dot_r + t.d_e * pose_rate(state) + t.g_e;
}

Vector6 estimated_dynamics(const VehicleState& state, const Vector6& e_dot_r,
                           const Vector6& e_ddot_r,
                           const RigidBodyParams& params) {
  return reference_dynamics(state, e_dot_r, e_ddot_r, params.estimated());
}

}  // namespace auvform
