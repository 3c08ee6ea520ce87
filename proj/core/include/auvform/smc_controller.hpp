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

#include <string>
#include <vector>

#include "auvform/types.hpp"
#include "auvform/vehicle_model.hpp"

namespace auvform {

/// Gain of the sliding surface sigma = eps_dot + 2 L eps + L^2 int(eps).
/// Stored as the diagonal of L; all entries must be positive.
struct SurfaceConfig {
  Vector6 lambda_s = Vector6::Constant(1.0);
  void validate() const;
};

Vector6 sliding_surface(const Vector6& eps, const Vector6& eps_dot,
                        const Vector6& integral_eps, const SurfaceConfig& cfg);

/// e_dot_r = e_dot_d - 2 L eps - L^2 int(eps), so that sigma = e_dot - e_dot_r.
Vector6 reference_rate(const Vector6& e_dot_d, const Vector6& eps,
                       const Vector6& integral_eps, const SurfaceConfig& cfg);

/// Time derivative of reference_rate: e_ddot_d - 2 L eps_dot - L^2 eps.
Vector6 reference_acceleration(const Vector6& e_ddot_d, const Vector6& eps,
                               const Vector6& eps_dot,
                               const SurfaceConfig& cfg);

struct SuperTwistGains {
  double lambda = 2.1;
  double rho = 0.36;
  double w_gain = 0.3;
  double sigma0 = 0.1;
  double u_max = 1.0;
  double phi = 0.2;          // disturbance bound
  double gamma_big = 1.0;    // upper input-gain bound
  double gamma_small = 1.0;  // lower input-gain bound
};

/// One violated finite-time convergence condition.
struct GainViolation {
  enum class Condition { kPositivity, kSwitchingGain, kExponent, kLambda };
  Condition condition;
  std::string message;
};

/// Checks W > phi / Gamma_M, 0 < rho <= 0.5 and
/// lambda^2 >= 4 phi Gamma_M (W + phi) / (Gamma_m^2 (W - phi)), plus
/// positivity of the constants. Returns every violation; empty means ok.
std::vector<GainViolation> validate_gains(const SuperTwistGains& g);

/// Saturated super-twisting proportional term, componentwise:
/// -lambda min(|s|, sigma0)^rho sign(s).
Vector6 super_twist_u1(const Vector6& sigma, const SuperTwistGains& g);

/// One Euler step of the super-twisting integral term: its rate is -u where
/// |u| > u_max, and -W sign(sigma) otherwise.
Vector6 super_twist_u2_step(const Vector6& integrator, const Vector6& sigma,
                            const Vector6& u_current, const SuperTwistGains& g,
                            double dt);

/// Adaptive estimate of the lumped uncertainty with its diagonal gains.
struct AdaptiveState {
  Vector6 f_est = Vector6::Zero();
  Vector6 k_gain = (Vector6() << 50, 50, 0, 0, 0, 50).finished();
  Vector6 gamma = (Vector6() << 50, 50, 0, 0, 0, 100).finished();
  double f_est_limit = 40.0;  // per-axis clamp [N]
};

struct ControllerState {
  Vector6 integral_eps = Vector6::Zero();
  Vector6 u2_integrator = Vector6::Zero();
  AdaptiveState adaptive;

  /// Zero the integrators and the estimate, keep the gains.
  void reset();
};

/// u1 = J^T (-lambda |sigma|^rho sign(sigma) + f_hat_r).
Vector6 equivalent_control(const Vector6& sigma, const Vector6& f_hat_r,
                           const JacobianSet& jac, const SuperTwistGains& g);

/// u2 = J^T (f_est - (K + C_e_hat) sigma).
Vector6 adaptive_control(const Vector6& sigma, const AdaptiveState& adaptive,
                         const Matrix6& c_e_hat, const JacobianSet& jac);

/// f_est <- clamp(f_est - Gamma sigma dt).
AdaptiveState adaptive_update(const AdaptiveState& adaptive,
                              const Vector6& sigma, double dt);

/// sigma^T (M_tilde_e + K) sigma >= |f_tilde_dot^T Gamma^+ w|. Zero diagonal
/// entries of Gamma are treated through the pseudo-inverse.
bool assumption_holds(const Vector6& sigma, const Vector6& w_vec,
                      const Vector6& f_tilde_dot, const Matrix6& m_tilde_e,
                      const Matrix6& k_gain, const Matrix6& gamma);

/// V = 1/2 (sigma^T M_e sigma + w^T Gamma^+ w).
double lyapunov_value(const Vector6& sigma, const Vector6& w_vec,
                      const Matrix6& m_e, const Matrix6& gamma);

/// Classic first-order law used as the comparison baseline:
/// u = J^T (f_hat_r - lambda sigma - W sign(sigma)).
Vector6 first_order_smc(const Vector6& sigma, const Vector6& f_hat_r,
                        const JacobianSet& jac, double w_gain, double lambda);

/// Which control law drives the vehicle.
enum class ControllerKind {
  kAdaptive,       // equivalent control + continuous adaptive term
  kSuperTwisting,  // equivalent control + integral super-twisting term
  kFirstOrder,     // baseline with a discontinuous switching term
};

/// Form of the proportional sliding term in the equivalent control.
enum class U1Form { kEquivalent, kSaturated };

struct BaselineGains {
  double lambda = 2.1;
  double w_gain = 0.3;
};

struct ControllerConfig {
  ControllerKind kind = ControllerKind::kAdaptive;
  U1Form u1_form = U1Form::kEquivalent;
  SurfaceConfig surface;
  SuperTwistGains gains;
  AdaptiveState adaptive;  // gains, clamp and initial estimate
  BaselineGains baseline;
  double integral_limit = 10.0;  // per-axis clamp on int(eps)
  int rate_divider = 1;          // controller runs every n-th sim step

  void validate() const;
};

std::string to_string(ControllerKind kind);
ControllerKind controller_kind_from_string(const std::string& s);

struct ControlOutput {
  Vector6 u1 = Vector6::Zero();     // body frame
  Vector6 u2 = Vector6::Zero();     // body frame
  Vector6 total = Vector6::Zero();  // body frame, u1 + u2
  /// Inertial-frame corrective part (total command minus model feedforward).
  Vector6 feedback = Vector6::Zero();
};

/// Evaluates the configured law at one instant. Pure.
ControlOutput compute_control(const ControllerConfig& cfg,
                              const ControllerState& state,
                              const Vector6& sigma, const Vector6& f_hat_r,
                              const Matrix6& c_e_hat, const JacobianSet& jac);

/// Advances the controller's integrators by dt after a command was applied.
void advance_controller(const ControllerConfig& cfg, ControllerState& state,
                        const Vector6& eps, const Vector6& sigma,
                        const ControlOutput& applied, double dt);

}  // namespace auvform
