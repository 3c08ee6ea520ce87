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
#include <random>

#include <gtest/gtest.h>

#include "auvform/thruster_allocation.hpp"

namespace auvform {
namespace {

TEST(Tcm, HandBuiltEntries) {
  const ThrusterConfig c;
  const ThrusterMatrix b = build_tcm(c);
  EXPECT_DOUBLE_EQ(b(0, 0), 0.6 * 0.65);
  EXPECT_DOUBLE_EQ(b(1, 0), -0.5 * 0.4 * 0.65);
  EXPECT_DOUBLE_EQ(b(1, 1), 0.5 * 0.4 * 0.65);
  EXPECT_DOUBLE_EQ(b(2, 0), 0.6 * 0.65 * 0.15);
  EXPECT_DOUBLE_EQ(b(2, 1), -0.6 * 0.65 * 0.15);
  EXPECT_DOUBLE_EQ(b(3, 2), 1.0);
  EXPECT_DOUBLE_EQ(b(4, 0), 0.25 * 0.6 * 0.35 * 0.4);
  EXPECT_EQ(b(0, 2), 0.0);
  EXPECT_EQ(b(3, 0), 0.0);
}

TEST(Tcm, SingleThrusterPulsesGiveColumns) {
  const ThrusterConfig c;
  const ThrusterMatrix b = build_tcm(c);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(wrench_from_thrust(Vector3::Unit(i), c).values, Vector5(b.col(i)));
  }
  EXPECT_THROW(wrench_from_thrust(Vector3(61.0, 0.0, 0.0), c), ConfigError);
}

TEST(Tcm, CoefficientIntervals) {
  auto bad = [](auto mutate) {
    ThrusterConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](ThrusterConfig& c) { c.k1 = 0.1; }).validate(), ConfigError);
  EXPECT_THROW(bad([](ThrusterConfig& c) { c.k3 = 1.5; }).validate(), ConfigError);
  EXPECT_THROW(bad([](ThrusterConfig& c) { c.l2 = 0.2; }).validate(), ConfigError);
  EXPECT_THROW(bad([](ThrusterConfig& c) { c.t2 = -0.1; }).validate(), ConfigError);
  EXPECT_THROW(bad([](ThrusterConfig& c) { c.t4 = 0.6; }).validate(), ConfigError);
  EXPECT_THROW(bad([](ThrusterConfig& c) { c.u_limit = 0.0; }).validate(), ConfigError);
  EXPECT_NO_THROW(bad([](ThrusterConfig& c) { c.k1 = 0.2; c.l1 = 1.0; c.t3 = -0.5; }).validate());
}

TEST(Wrench5, BodyRoundTripDropsRoll) {
  Vector6 w;
  w << 1, 2, 3, 4, 5, 6;
  const Wrench5 r = Wrench5::from_body6(w);
  EXPECT_EQ(r.tau_u(), 1.0);
  EXPECT_EQ(r.tau_v(), 2.0);
  EXPECT_EQ(r.tau_r(), 6.0);
  EXPECT_EQ(r.tau_w(), 3.0);
  EXPECT_EQ(r.tau_q(), 5.0);
  Vector6 back = w;
  back(kRoll) = 0.0;
  EXPECT_EQ(r.to_body6(), back);
}

TEST(Allocation, RoundTripInRange) {
  const ThrusterConfig c;
  const ThrusterAllocator alloc(c);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-60.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const Vector3 ut(u(rng), u(rng), u(rng));
    Wrench5 tau;
    tau.values = alloc.tcm() * ut;
    const AllocationResult r = alloc.allocate(tau);
    EXPECT_FALSE(r.saturated);
    EXPECT_LT((wrench_from_thrust(r.thrust, c).values - tau.values).norm(), 1e-9);
    EXPECT_LT(r.residual.norm(), 1e-9);
  }
}

TEST(Allocation, LinearBeforeSaturation) {
  const ThrusterAllocator alloc{ThrusterConfig{}};
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    Wrench5 tau;
    for (int k = 0; k < 5; ++k) tau.values(k) = u(rng);
    Wrench5 scaled;
    scaled.values = 0.37 * tau.values;
    const Vector3 a = alloc.allocate(tau).thrust;
    const Vector3 b = alloc.allocate(scaled).thrust;
    if ((a.cwiseAbs().array() < 60.0).all()) {
      EXPECT_LT((b - 0.37 * a).norm(), 1e-12);
    }
  }
}

TEST(Allocation, LeastSquaresOutOfRange) {
  const ThrusterAllocator alloc{ThrusterConfig{}};
  Wrench5 tau;
  tau.values << 1.0, 0.7, 0.3, -0.4, 0.05;
  const AllocationResult r = alloc.allocate(tau);
  // Normal equations: the residual is orthogonal to range(B_t).
  EXPECT_LT((alloc.tcm().transpose() * r.residual).norm(), 1e-12);
  EXPECT_GT(r.residual.norm(), 1e-6);
}

TEST(Allocation, SaturationNeverExceeded) {
  const ThrusterConfig c;
  const ThrusterAllocator alloc(c);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-500.0, 500.0);
  for (int i = 0; i < 1000; ++i) {
    Wrench5 tau;
    for (int k = 0; k < 5; ++k) tau.values(k) = u(rng);
    const AllocationResult r = alloc.allocate(tau);
    EXPECT_LE(r.thrust.cwiseAbs().maxCoeff(), c.u_limit);
    EXPECT_LT((r.residual - (tau.values - alloc.tcm() * r.thrust)).norm(), 1e-9);
  }
  Wrench5 big;
  big.values << 1000.0, 0.0, 0.0, 0.0, 0.0;
  EXPECT_TRUE(alloc.allocate(big).saturated);
}

TEST(Allocation, PureSwayIsUnreachableWithoutSwayShare) {
  ThrusterConfig c;
  c.t1 = c.t2 = 0.0;
  Wrench5 tau;
  tau.values << 0.0, 5.0, 0.0, 0.0, 0.0;
  const AllocationResult r = allocate(tau, c);
  EXPECT_NEAR(r.residual(1), 5.0, 1e-12);
  EXPECT_LT(r.thrust.norm(), 1e-12);
}

}  // namespace
}  // namespace auvform
