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

#include <cmath>

#include <gtest/gtest.h>

#include "auvform/integrator.hpp"

namespace auvform {
namespace {

double decay_error(double dt) {
  using V1 = Eigen::Matrix<double, 1, 1>;
  auto f = [](double, const V1& x) { return V1(-x); };
  V1 x = V1::Constant(1.0);
  const int n = static_cast<int>(std::lround(1.0 / dt));
  for (int k = 0; k < n; ++k) x = rk4_step(f, x, k * dt, dt);
  return std::abs(x(0) - std::exp(-1.0));
}

TEST(Rk4, FourthOrderOnLinearDecay) {
  const double e1 = decay_error(0.04);
  const double e2 = decay_error(0.02);
  const double e3 = decay_error(0.01);
  EXPECT_GE(std::log2(e1 / e2), 3.8);
  EXPECT_GE(std::log2(e2 / e3), 3.8);
  EXPECT_GE(std::log2(e1 / e3) / 2.0, 3.8);
}

TEST(Rk4, ExactForCubicInTime) {
  using V1 = Eigen::Matrix<double, 1, 1>;
  auto f = [](double t, const V1&) { return V1(3.0 * t * t); };
  const V1 x0 = V1::Zero();
  const V1 x = rk4_step(f, x0, 1.0, 0.5);
  EXPECT_NEAR(x(0), 1.5 * 1.5 * 1.5 - 1.0, 1e-14);
}

TEST(VehicleStep, MatchesGenericRk4OnStateDerivative) {
  const RigidBodyParams p = RigidBodyParams::small_auv();
  const VehicleDynamics plant(p);
  VehicleState s;
  s.position = Vector3(1.0, 2.0, -3.0);
  s.euler = Vector3(0.1, -0.2, 0.3);
  s.linear_velocity = Vector3(0.5, -0.1, 0.05);
  s.angular_velocity = Vector3(0.02, 0.01, -0.03);
  Vector6 tau;
  tau << 3.0, -1.0, 0.5, 0.0, 0.2, -0.4;
  const DisturbanceFn d = [](double t, const VehicleState&) {
    Vector6 w = Vector6::Zero();
    w(0) = std::sin(t);
    return Wrench6::body(w);
  };
  const VehicleState next = plant.step(s, Wrench6::body(tau), d, 0.3, 0.05);

  auto f = [&](double t, const Vector12& x) {
    const VehicleState st = VehicleState::from_vector(x);
    return state_derivative(st, Wrench6::body(tau), d(t, st), p);
  };
  const Vector12 ref = rk4_step(f, s.to_vector(), 0.3, 0.05);
  EXPECT_LT((next.to_vector() - ref).norm(), 1e-12);
}

TEST(VehicleStep, WrapsYaw) {
  const VehicleDynamics plant(RigidBodyParams::small_auv());
  VehicleState s;
  s.euler.z() = 3.1;
  s.angular_velocity.z() = 1.0;
  const DisturbanceFn none = [](double, const VehicleState&) {
    return Wrench6::body(Vector6::Zero());
  };
  for (int k = 0; k < 20; ++k) {
    s = plant.step(s, Wrench6::body(Vector6::Zero()), none, 0.0, 0.01);
  }
  EXPECT_LT(s.euler.z(), 0.0);
  EXPECT_GT(s.euler.z(), -3.2);
}

}  // namespace
}  // namespace auvform
