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
#include <numbers>

#include <gtest/gtest.h>

#include "auvform/formation.hpp"

namespace auvform {
namespace {

VehicleState leader_at(const Reference& r) {
  return VehicleState::from_pose(r.pose, Vector6::Zero());
}

TEST(Leader, SpiralStart) {
  const TrajectorySpec spec;
  const Reference r = leader_reference(0.0, spec);
  EXPECT_LT((r.pose.head<3>() - (spec.center + Vector3(spec.radius, 0, 0))).norm(), 1e-12);
  EXPECT_NEAR(r.rate.head<2>().norm(), spec.radius * spec.angular_rate, 1e-12);
  EXPECT_NEAR(r.rate(kZ), spec.vertical_rate, 1e-15);
  EXPECT_NEAR(r.pose(kYaw), std::numbers::pi / 2, 1e-12);
}

TEST(Leader, AnalyticRatesMatchFiniteDifferences) {
  const TrajectorySpec spec;
  const double h = 1e-5;
  for (double t = 0.5; t < spec.duration; t += 7.3) {
    const Reference a = leader_reference(t - h, spec);
    const Reference b = leader_reference(t + h, spec);
    const Reference r = leader_reference(t, spec);
    Vector6 dpose = b.pose - a.pose;
    dpose(kYaw) = wrap_angle(dpose(kYaw));
    EXPECT_LT((dpose / (2 * h) - r.rate).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_LT(((b.rate - a.rate) / (2 * h) - r.accel).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(Leader, YawIsTangent) {
  const TrajectorySpec spec;
  for (double t = 0.0; t <= spec.duration; t += 11.0) {
    const Reference r = leader_reference(t, spec);
    const double heading = std::atan2(r.rate(kY), r.rate(kX));
    EXPECT_NEAR(wrap_angle(heading - r.pose(kYaw)), 0.0, 1e-12);
  }
}

TEST(Leader, SmoothnessBounds) {
  const TrajectorySpec spec;
  const double w = spec.angular_rate, r = spec.radius;
  const double v_max = std::hypot(r * w, spec.vertical_rate) + w;
  const double a_max = r * w * w;
  for (double t = 0.0; t <= spec.duration; t += 0.5) {
    const Reference ref = leader_reference(t, spec);
    EXPECT_LE(ref.rate.norm(), v_max + 1e-12);
    EXPECT_LE(ref.accel.norm(), a_max + 1e-12);
  }
}

TEST(Leader, StationaryLineAndRange) {
  TrajectorySpec spec;
  spec.kind = TrajectoryKind::kLine;
  spec.start = Vector3(1, 2, -3);
  const Reference a = leader_reference(0.0, spec);
  const Reference b = leader_reference(50.0, spec);
  EXPECT_EQ(a.pose, b.pose);
  EXPECT_EQ(b.rate, Vector6::Zero());
  EXPECT_EQ(b.accel, Vector6::Zero());
  EXPECT_THROW(leader_reference(-1.0, spec), ConfigError);
  EXPECT_THROW(leader_reference(spec.duration + 1.0, spec), ConfigError);
}

TEST(Leader, WaypointsAtConstantSpeed) {
  TrajectorySpec spec;
  spec.kind = TrajectoryKind::kWaypoints;
  spec.waypoints = {Vector3(0, 0, -1), Vector3(3, 0, -1), Vector3(3, 4, -1)};
  spec.speed = 1.0;
  const Reference r = leader_reference(5.0, spec);
  EXPECT_LT((r.pose.head<3>() - Vector3(3, 2, -1)).norm(), 1e-12);
  EXPECT_NEAR(r.pose(kYaw), std::numbers::pi / 2, 1e-12);
  EXPECT_LT((r.rate.head<3>() - Vector3(0, 1, 0)).norm(), 1e-12);
  const Reference end = leader_reference(20.0, spec);
  EXPECT_LT((end.pose.head<3>() - Vector3(3, 4, -1)).norm(), 1e-12);
  EXPECT_EQ(end.rate, Vector6::Zero());
}

TEST(Follower, HandRotations) {
  VehicleState leader;
  EXPECT_EQ(follower_reference(leader, Vector6::Zero(), {Vector3::Zero(), 0.0}).pose,
            leader.pose());
  const Reference r = follower_reference(leader, Vector6::Zero(), {Vector3(-2, 1, 0), 0.0});
  EXPECT_LT((r.pose.head<3>() - Vector3(-2, 1, 0)).norm(), 1e-15);
  leader.euler.z() = std::numbers::pi / 2;
  const Reference q = follower_reference(leader, Vector6::Zero(), {Vector3(-2, 0, 0), 0.0});
  EXPECT_LT((q.pose.head<3>() - Vector3(0, -2, 0)).norm(), 1e-12);
  leader.euler.y() = std::numbers::pi / 2;
  EXPECT_THROW(follower_reference(leader, Vector6::Zero(), {}), SingularityError);
}

TEST(Follower, RateMatchesFiniteDifference) {
  const TrajectorySpec spec;
  const FormationSlot slot{Vector3(-2, 1.5, 0.3), 0.0};
  const double h = 1e-5;
  for (double t = 1.0; t < 100.0; t += 13.0) {
    const Reference lr = leader_reference(t, spec);
    const Reference f = follower_reference(leader_at(lr), lr.rate, slot);
    const Reference lm = leader_reference(t - h, spec), lp = leader_reference(t + h, spec);
    const Reference fm = follower_reference(leader_at(lm), lm.rate, slot);
    const Reference fp = follower_reference(leader_at(lp), lp.rate, slot);
    EXPECT_LT(((fp.pose.head<3>() - fm.pose.head<3>()) / (2 * h) - f.rate.head<3>())
                  .cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(Follower, RigidFormation) {
  const TrajectorySpec spec;
  const FormationSpec form;
  const double d01 = form.followers[0].offset.norm();
  const double d12 = (form.followers[0].offset - form.followers[1].offset).norm();
  for (double t = 0.0; t <= spec.duration; t += 2.5) {
    const Reference lr = leader_reference(t, spec);
    const VehicleState l = leader_at(lr);
    const Reference a = follower_reference(l, lr.rate, form.followers[0]);
    const Reference b = follower_reference(l, lr.rate, form.followers[1]);
    EXPECT_NEAR((a.pose.head<3>() - lr.pose.head<3>()).norm(), d01, 1e-9);
    EXPECT_NEAR((a.pose.head<3>() - b.pose.head<3>()).norm(), d12, 1e-9);
  }
}

TEST(Errors, DefinitionAndMismatch) {
  VehicleState s;
  s.position.x() = 0.5;
  Reference r;
  const auto errs = formation_error({s, VehicleState{}}, {r, r});
  EXPECT_DOUBLE_EQ(errs[0].eps(kX), 0.5);
  EXPECT_EQ(errs[1].eps, Vector6::Zero());
  EXPECT_EQ(errs[1].eps_dot, Vector6::Zero());
  EXPECT_THROW(formation_error({s}, {r, r}), ConfigError);

  // Yaw error is wrapped.
  s.euler.z() = 3.1;
  r.pose(kYaw) = -3.1;
  EXPECT_NEAR(tracking_error(s, r).eps(kYaw), 6.2 - 2 * std::numbers::pi, 1e-12);
}

TEST(FormationSpecTest, RejectsSharedSlots) {
  FormationSpec f;
  f.followers[1] = f.followers[0];
  EXPECT_THROW(f.validate(), ConfigError);
  f.followers = {{Vector3::Zero(), 0.0}};
  EXPECT_THROW(f.validate(), ConfigError);
}

}  // namespace
}  // namespace auvform
