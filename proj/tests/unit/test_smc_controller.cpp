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

#include "auvform/smc_controller.hpp"

namespace auvform {
namespace {

Vector6 ex(double v) {
  Vector6 out = Vector6::Zero();
  out(0) = v;
  return out;
}

JacobianSet identity_jacobian() { return kinematic_transform(VehicleState{}); }

JacobianSet random_jacobian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-1.2, 1.2);
  VehicleState s;
  s.euler = Vector3(a(rng), a(rng), 2.5 * a(rng));
  return kinematic_transform(s);
}

// Independent re-evaluation of the finite-time conditions.
bool conditions_hold(double lambda, double rho, double w, double phi, double gm, double gs) {
  const bool c1 = w > phi / gm;
  const bool c2 = rho > 0.0 && rho <= 0.5;
  const bool c3 = lambda * lambda >= 4.0 * phi * gm * (w + phi) / (gs * gs * (w - phi));
  return c1 && c2 && c3;
}

TEST(Surface, HandValues) {
  SurfaceConfig cfg;
  cfg.lambda_s.setConstant(2.0);
  EXPECT_EQ(sliding_surface(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), cfg), Vector6::Zero());
  EXPECT_DOUBLE_EQ(sliding_surface(ex(1.0), Vector6::Zero(), Vector6::Zero(), cfg)(0), 4.0);
  EXPECT_DOUBLE_EQ(sliding_surface(Vector6::Zero(), Vector6::Zero(), ex(1.0), cfg)(0), 4.0);
  SurfaceConfig unit;
  EXPECT_DOUBLE_EQ(reference_rate(Vector6::Zero(), ex(1.0), Vector6::Zero(), unit)(0), -2.0);
  SurfaceConfig bad;
  bad.lambda_s(3) = 0.0;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(Surface, ReferenceRateIdentity) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  auto rnd = [&] {
    Vector6 v;
    for (int i = 0; i < 6; ++i) v(i) = n(rng);
    return v;
  };
  SurfaceConfig cfg;
  for (int k = 0; k < 100; ++k) {
    cfg.lambda_s = rnd().cwiseAbs().array() + 0.1;
    const Vector6 e_dot = rnd(), e_dot_d = rnd(), eps = rnd(), integ = rnd();
    const Vector6 sigma = sliding_surface(eps, e_dot - e_dot_d, integ, cfg);
    const Vector6 diff = e_dot - reference_rate(e_dot_d, eps, integ, cfg);
    EXPECT_LT((sigma - diff).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Gains, DefaultsAccepted) {
  const SuperTwistGains g;
  EXPECT_TRUE(validate_gains(g).empty());
}

TEST(Gains, SingleViolations) {
  using C = GainViolation::Condition;
  SuperTwistGains g;
  g.rho = 0.6;
  auto v = validate_gains(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, C::kExponent);

  g = SuperTwistGains{};
  g.w_gain = 0.1;
  v = validate_gains(g);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].condition, C::kSwitchingGain);

  g = SuperTwistGains{};
  g.lambda = 1.9;
  v = validate_gains(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, C::kLambda);
}

TEST(Gains, MatchesIndependentEvaluation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.05, 3.0), r(0.01, 0.9);
  for (int i = 0; i < 2000; ++i) {
    SuperTwistGains g;
    g.lambda = u(rng);
    g.rho = r(rng);
    g.w_gain = u(rng);
    g.phi = u(rng) / 3.0;
    g.gamma_big = u(rng);
    g.gamma_small = u(rng);
    const bool expect =
        conditions_hold(g.lambda, g.rho, g.w_gain, g.phi, g.gamma_big, g.gamma_small);
    EXPECT_EQ(validate_gains(g).empty(), expect) << "case " << i;
  }
}

TEST(SuperTwist, HandValues) {
  const SuperTwistGains g;
  EXPECT_EQ(super_twist_u1(Vector6::Zero(), g), Vector6::Zero());
  EXPECT_NEAR(super_twist_u1(ex(0.05), g)(0), -2.1 * std::pow(0.05, 0.36), 1e-12);
  EXPECT_NEAR(super_twist_u1(ex(0.05), g)(0), -0.7143, 1e-4);
  EXPECT_NEAR(super_twist_u1(ex(0.5), g)(0), -0.917, 1e-3);

  EXPECT_EQ(super_twist_u2_step(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), g, 0.01),
            Vector6::Zero());
  EXPECT_NEAR(super_twist_u2_step(Vector6::Zero(), ex(1.0), ex(0.5), g, 0.01)(0), -0.003, 1e-15);
  // |u| > u_max: the integrator rate is -u.
  EXPECT_NEAR(super_twist_u2_step(ex(0.4), ex(1.0), ex(2.0), g, 0.01)(0), 0.4 - 0.02, 1e-15);
}

TEST(EquivalentControl, HandValues) {
  const SuperTwistGains g;
  const JacobianSet id = identity_jacobian();
  EXPECT_EQ(equivalent_control(Vector6::Zero(), Vector6::Zero(), id, g), Vector6::Zero());
  EXPECT_NEAR(equivalent_control(ex(1.0), Vector6::Zero(), id, g)(0), -2.1, 1e-12);

  std::mt19937_64 rng(9);
  const JacobianSet j = random_jacobian(rng);
  Vector6 f;
  f << 1, -2, 3, 0.5, -0.5, 0.25;
  EXPECT_LT((equivalent_control(Vector6::Zero(), f, j, g) - j.full.transpose() * f).norm(), 1e-14);
}

TEST(AdaptiveControl, HandValues) {
  const JacobianSet id = identity_jacobian();
  AdaptiveState a;
  EXPECT_EQ(adaptive_control(Vector6::Zero(), a, Matrix6::Zero(), id), Vector6::Zero());
  EXPECT_NEAR(adaptive_control(ex(0.1), a, Matrix6::Zero(), id)(0), -5.0, 1e-12);
  a.f_est << 1, 2, 3, 4, 5, 6;
  EXPECT_EQ(adaptive_control(Vector6::Zero(), a, Matrix6::Zero(), id), a.f_est);
}

TEST(AdaptiveUpdate, EulerRampAndClamp) {
  AdaptiveState a;
  EXPECT_EQ(adaptive_update(a, Vector6::Zero(), 0.01).f_est, Vector6::Zero());
  EXPECT_NEAR(adaptive_update(a, ex(0.1), 0.01).f_est(0), -0.05, 1e-15);
  for (int k = 0; k < 100; ++k) a = adaptive_update(a, ex(0.1), 0.01);
  EXPECT_NEAR(a.f_est(0), -100 * 50 * 0.1 * 0.01, 1e-12);
  for (int k = 0; k < 10000; ++k) a = adaptive_update(a, ex(0.1), 0.01);
  EXPECT_DOUBLE_EQ(a.f_est(0), -40.0);
  // Axes with zero gain never move.
  a = adaptive_update(AdaptiveState{}, Vector6::Constant(1.0), 0.01);
  EXPECT_EQ(a.f_est(2), 0.0);
  EXPECT_EQ(a.f_est(3), 0.0);
}

TEST(Assumption, Cases) {
  const Matrix6 k = AdaptiveState{}.k_gain.asDiagonal();
  const Matrix6 gamma = AdaptiveState{}.gamma.asDiagonal();
  EXPECT_TRUE(assumption_holds(Vector6::Zero(), ex(1.0), Vector6::Zero(), Matrix6::Zero(), k, gamma));
  EXPECT_TRUE(assumption_holds(ex(0.3), Vector6::Zero(), ex(100.0), Matrix6::Zero(), k, gamma));
  EXPECT_TRUE(assumption_holds(ex(0.3), ex(1.0), ex(1.0), Matrix6::Identity(), k, gamma));
  EXPECT_FALSE(assumption_holds(ex(0.3), ex(1.0), ex(1000.0), Matrix6::Zero(), Matrix6::Zero(), gamma));
}

TEST(Lyapunov, HandValues) {
  EXPECT_EQ(lyapunov_value(Vector6::Zero(), Vector6::Zero(), Matrix6::Identity(), Matrix6::Identity()), 0.0);
  EXPECT_DOUBLE_EQ(lyapunov_value(ex(1.0), Vector6::Zero(), Matrix6::Identity(), Matrix6::Identity()), 0.5);
  // Zero-gain axes do not contribute through w.
  Vector6 w = Vector6::Zero();
  w(2) = 7.0;
  EXPECT_EQ(lyapunov_value(Vector6::Zero(), w, Matrix6::Identity(),
                           Matrix6(AdaptiveState{}.gamma.asDiagonal())), 0.0);
}

TEST(FirstOrder, HandValuesAndJump) {
  const JacobianSet id = identity_jacobian();
  EXPECT_EQ(first_order_smc(Vector6::Zero(), Vector6::Zero(), id, 0.3, 1.0), Vector6::Zero());
  EXPECT_NEAR(first_order_smc(ex(1.0), Vector6::Zero(), id, 0.3, 1.0)(0), -1.3, 1e-12);
  const double jump = first_order_smc(ex(-0.001), Vector6::Zero(), id, 0.3, 1.0)(0) -
                      first_order_smc(ex(0.001), Vector6::Zero(), id, 0.3, 1.0)(0);
  EXPECT_NEAR(jump, 0.6 + 0.002, 1e-12);
}

TEST(ControlLaw, OnSurfaceIdleIsFeedforward) {
  std::mt19937_64 rng(15);
  const ControllerConfig cfg;
  const ControllerState st;
  const JacobianSet j = random_jacobian(rng);
  Vector6 f;
  f << 4, -1, 2, 0.1, 0.2, -0.3;
  const ControlOutput out = compute_control(cfg, st, Vector6::Zero(), f, Matrix6::Identity(), j);
  EXPECT_EQ(out.total, Vector6(j.full.transpose() * f));
  EXPECT_LT(out.feedback.norm(), 1e-12);
}

TEST(ControlLaw, ContinuousInSigma) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n(0.0, 1.0);
  const ControllerConfig cfg;
  ControllerState st;
  st.adaptive.f_est << 1, -1, 0, 0, 0, 2;
  const JacobianSet j = random_jacobian(rng);
  Matrix6 c = Matrix6::Zero();
  c(0, 5) = 0.7;
  c(5, 0) = -0.7;
  for (int i = 0; i < 1000; ++i) {
    Vector6 s;
    for (int k = 0; k < 6; ++k) s(k) = (i % 2 ? 1e-9 : 1.0) * n(rng);
    Vector6 d;
    for (int k = 0; k < 6; ++k) d(k) = n(rng);
    d *= 1e-12 / d.norm();
    const Vector6 u0 = compute_control(cfg, st, s, Vector6::Zero(), c, j).total;
    const Vector6 u1 = compute_control(cfg, st, s + d, Vector6::Zero(), c, j).total;
    // |s|^0.36 keeps the modulus of continuity near 2.1 * 1e-12^0.36.
    EXPECT_LT((u1 - u0).norm(), 1e-3);
  }
}

TEST(ControlLaw, FirstOrderJumpsAcrossZero) {
  ControllerConfig cfg;
  cfg.kind = ControllerKind::kFirstOrder;
  const ControllerState st;
  const JacobianSet id = identity_jacobian();
  const double a = compute_control(cfg, st, ex(1e-12), Vector6::Zero(), Matrix6::Zero(), id).total(0);
  const double b = compute_control(cfg, st, ex(-1e-12), Vector6::Zero(), Matrix6::Zero(), id).total(0);
  EXPECT_GT(b - a, 0.5);
}

TEST(ControlLaw, AdaptiveEstimateCancelsConstantDisturbance) {
  // Unit mass moving along x: x_ddot = u + d. The model is exact, so the
  // estimate has to absorb d alone.
  const double d = 3.0, dt = 1e-3;
  const ControllerConfig cfg;
  ControllerState st;
  const JacobianSet id = identity_jacobian();
  double x = 0.5, v = 0.0;
  bool reached = false;
  for (int k = 0; k < 60000; ++k) {
    const Vector6 eps = ex(x), eps_dot = ex(v);
    const Vector6 sigma = sliding_surface(eps, eps_dot, st.integral_eps, cfg.surface);
    const Vector6 e_ddot_r = reference_acceleration(Vector6::Zero(), eps, eps_dot, cfg.surface);
    const ControlOutput out = compute_control(cfg, st, sigma, e_ddot_r, Matrix6::Zero(), id);
    const double a = out.total(0) + d;
    x += v * dt + 0.5 * a * dt * dt;
    v += a * dt;
    advance_controller(cfg, st, eps, sigma, out, dt);
    if (k * dt > 20.0 && std::abs(sigma(0)) < cfg.gains.sigma0) reached = true;
  }
  EXPECT_TRUE(reached);
  EXPECT_NEAR(st.adaptive.f_est(0), -d, 0.05 * d);
  EXPECT_LT(std::abs(x), 1e-3);
}

TEST(ControlLaw, IntegralClampAndKinds) {
  ControllerConfig cfg;
  ControllerState st;
  for (int k = 0; k < 1000; ++k) {
    advance_controller(cfg, st, ex(1.0), Vector6::Zero(), ControlOutput{}, 0.1);
  }
  EXPECT_DOUBLE_EQ(st.integral_eps(0), 10.0);
  EXPECT_EQ(controller_kind_from_string("super_twisting"), ControllerKind::kSuperTwisting);
  EXPECT_EQ(to_string(ControllerKind::kFirstOrder), "first_order");
  EXPECT_THROW(controller_kind_from_string("pid"), ConfigError);
  cfg.gains.rho = 0.6;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

}  // namespace
}  // namespace auvform
