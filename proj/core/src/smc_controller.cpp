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

#include "auvform/smc_controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace auvform {
namespace {

Vector6 power_term(const Vector6& s, double lambda, double rho) {
  Vector6 out;
  for (int i = 0; i < 6; ++i) {
    out(i) = -lambda * std::pow(std::abs(s(i)), rho) * sgn(s(i));
  }
  return out;
}

Vector6 sign_vec(const Vector6& s) {
  return s.unaryExpr([](double v) { return sgn(v); });
}

// J^-T u, i.e. body wrench -> inertial generalized force.
Vector6 inverse_transpose_apply(const JacobianSet& jac, const Vector6& u) {
  Vector6 out;
  out.head<3>() = jac.rot * u.head<3>();
  out.tail<3>() = jac.ang.transpose().partialPivLu().solve(u.tail<3>());
  return out;
}

Vector6 pseudo_inverse_diag(const Matrix6& m) {
  Vector6 d;
  for (int i = 0; i < 6; ++i) d(i) = m(i, i) != 0.0 ? 1.0 / m(i, i) : 0.0;
  return d;
}

}  // namespace

void SurfaceConfig::validate() const {
  if (!lambda_s.allFinite() || (lambda_s.array() <= 0.0).any()) {
    throw ConfigError("surface gain must be diagonal with all entries > 0");
  }
}

Vector6 sliding_surface(const Vector6& eps, const Vector6& eps_dot,
                        const Vector6& integral_eps, const SurfaceConfig& cfg) {
  const auto l = cfg.lambda_s.array();
  return (eps_dot.array() + 2.0 * l * eps.array() +
          l * l * integral_eps.array()).matrix();
}

Vector6 reference_rate(const Vector6& e_dot_d, const Vector6& eps,
                       const Vector6& integral_eps, const SurfaceConfig& cfg) {
  const auto l = cfg.lambda_s.array();
  return (e_dot_d.array() - 2.0 * l * eps.array() -
          l * l * integral_eps.array()).matrix();
}

Vector6 reference_acceleration(const Vector6& e_ddot_d, const Vector6& eps,
                               const Vector6& eps_dot,
                               const SurfaceConfig& cfg) {
  const auto l = cfg.lambda_s.array();
  return (e_ddot_d.array() - 2.0 * l * eps_dot.array() -
          l * l * eps.array()).matrix();
}

std::vector<GainViolation> validate_gains(const SuperTwistGains& g) {
  using C = GainViolation::Condition;
  std::vector<GainViolation> out;
  auto report = [&out](C c, const std::string& msg) { out.push_back({c, msg}); };

  if (!(g.lambda > 0.0 && g.w_gain > 0.0 && g.phi > 0.0 &&
        g.gamma_big > 0.0 && g.gamma_small > 0.0 && g.sigma0 > 0.0 &&
        g.u_max > 0.0)) {
    report(C::kPositivity,
           "lambda, W, phi, Gamma_M, Gamma_m, sigma0 and u_max must be > 0");
  }
  if (!(g.w_gain > g.phi / g.gamma_big)) {
    std::ostringstream os;
    os << "switching gain W = " << g.w_gain << " must exceed phi / Gamma_M = "
       << g.phi / g.gamma_big;
    report(C::kSwitchingGain, os.str());
  }
  if (!(g.rho > 0.0 && g.rho <= 0.5)) {
    std::ostringstream os;
    os << "exponent rho = " << g.rho << " must lie in (0, 0.5]";
    report(C::kExponent, os.str());
  }
  const double denom = g.gamma_small * g.gamma_small * (g.w_gain - g.phi);
  const double bound =
      denom != 0.0
          ? 4.0 * g.phi * g.gamma_big * (g.w_gain + g.phi) / denom
          : std::numeric_limits<double>::infinity();
  if (!(g.lambda * g.lambda >= bound)) {
    std::ostringstream os;
    os << "lambda^2 = " << g.lambda * g.lambda
       << " must be >= 4 phi Gamma_M (W + phi) / (Gamma_m^2 (W - phi)) = "
       << bound;
    report(C::kLambda, os.str());
  }
  return out;
}

Vector6 super_twist_u1(const Vector6& sigma, const SuperTwistGains& g) {
  Vector6 out;
  for (int i = 0; i < 6; ++i) {
    const double mag = std::min(std::abs(sigma(i)), std::abs(g.sigma0));
    out(i) = -g.lambda * std::pow(mag, g.rho) * sgn(sigma(i));
  }
  return out;
}

Vector6 super_twist_u2_step(const Vector6& integrator, const Vector6& sigma,
                            const Vector6& u_current, const SuperTwistGains& g,
                            double dt) {
  Vector6 next = integrator;
  for (int i = 0; i < 6; ++i) {
    const double rate = std::abs(u_current(i)) > g.u_max
                            ? -u_current(i)
                            : -g.w_gain * sgn(sigma(i));
    next(i) += rate * dt;
  }
  return next;
}

void ControllerState::reset() {
  integral_eps.setZero();
  u2_integrator.setZero();
  adaptive.f_est.setZero();
}

Vector6 equivalent_control(const Vector6& sigma, const Vector6& f_hat_r,
                           const JacobianSet& jac, const SuperTwistGains& g) {
  return jac.full.transpose() * (power_term(sigma, g.lambda, g.rho) + f_hat_r);
}

Vector6 adaptive_control(const Vector6& sigma, const AdaptiveState& adaptive,
                         const Matrix6& c_e_hat, const JacobianSet& jac) {
  const Matrix6 k = adaptive.k_gain.asDiagonal();
  return jac.full.transpose() * (adaptive.f_est - (k + c_e_hat) * sigma);
}

AdaptiveState adaptive_update(const AdaptiveState& adaptive,
                              const Vector6& sigma, double dt) {
  AdaptiveState next = adaptive;
  const double lim = adaptive.f_est_limit;
  next.f_est = (adaptive.f_est - adaptive.gamma.cwiseProduct(sigma) * dt)
                   .cwiseMax(-lim)
                   .cwiseMin(lim);
  return next;
}

bool assumption_holds(const Vector6& sigma, const Vector6& w_vec,
                      const Vector6& f_tilde_dot, const Matrix6& m_tilde_e,
                      const Matrix6& k_gain, const Matrix6& gamma) {
  const double lhs = sigma.dot((m_tilde_e + k_gain) * sigma);
  const double rhs =
      std::abs(f_tilde_dot.dot(pseudo_inverse_diag(gamma).cwiseProduct(w_vec)));
  return lhs >= rhs;
}

double lyapunov_value(const Vector6& sigma, const Vector6& w_vec,
                      const Matrix6& m_e, const Matrix6& gamma) {
  return 0.5 * (sigma.dot(m_e * sigma) +
                w_vec.dot(pseudo_inverse_diag(gamma).cwiseProduct(w_vec)));
}

Vector6 first_order_smc(const Vector6& sigma, const Vector6& f_hat_r,
                        const JacobianSet& jac, double w_gain, double lambda) {
  return jac.full.transpose() *
         (f_hat_r - lambda * sigma - w_gain * sign_vec(sigma));
}

void ControllerConfig::validate() const {
  surface.validate();
  if (!validate_gains(gains).empty()) {
    std::string msg = "controller gains violate the convergence conditions:";
    for (const auto& v : validate_gains(gains)) msg += " [" + v.message + "]";
    throw ConfigError(msg);
  }
  if ((adaptive.k_gain.array() < 0.0).any() || (adaptive.gamma.array() < 0.0).any()) {
    throw ConfigError("adaptive gains K and Gamma must be non-negative diagonals");
  }
  if (!(adaptive.f_est_limit > 0.0)) throw ConfigError("f_est_limit must be > 0");
  if (!(integral_limit > 0.0)) throw ConfigError("integral_limit must be > 0");
  if (rate_divider < 1) throw ConfigError("rate_divider must be >= 1");
  if (!(baseline.lambda >= 0.0 && baseline.w_gain >= 0.0)) {
    throw ConfigError("baseline gains must be >= 0");
  }
}

std::string to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::kAdaptive: return "adaptive";
    case ControllerKind::kSuperTwisting: return "super_twisting";
    case ControllerKind::kFirstOrder: return "first_order";
  }
  return "adaptive";
}

ControllerKind controller_kind_from_string(const std::string& s) {
  if (s == "adaptive") return ControllerKind::kAdaptive;
  if (s == "super_twisting") return ControllerKind::kSuperTwisting;
  if (s == "first_order") return ControllerKind::kFirstOrder;
  throw ConfigError("unknown controller kind '" + s +
                    "' (expected adaptive, super_twisting or first_order)");
}

ControlOutput compute_control(const ControllerConfig& cfg,
                              const ControllerState& state,
                              const Vector6& sigma, const Vector6& f_hat_r,
                              const Matrix6& c_e_hat, const JacobianSet& jac) {
  ControlOutput out;
  const Matrix6 jt = jac.full.transpose();
  switch (cfg.kind) {
    case ControllerKind::kFirstOrder:
      out.u1 = first_order_smc(sigma, f_hat_r, jac, cfg.baseline.w_gain,
                               cfg.baseline.lambda);
      break;
    case ControllerKind::kAdaptive:
    case ControllerKind::kSuperTwisting: {
      out.u1 = cfg.u1_form == U1Form::kEquivalent
                   ? equivalent_control(sigma, f_hat_r, jac, cfg.gains)
                   : Vector6(jt * (super_twist_u1(sigma, cfg.gains) + f_hat_r));
      if (cfg.kind == ControllerKind::kAdaptive) {
        out.u2 = adaptive_control(sigma, state.adaptive, c_e_hat, jac);
      } else {
        out.u2 = jt * state.u2_integrator;
      }
      break;
    }
  }
  out.total = out.u1 + out.u2;
  out.feedback = inverse_transpose_apply(jac, out.total) - f_hat_r;
  return out;
}

void advance_controller(const ControllerConfig& cfg, ControllerState& state,
                        const Vector6& eps, const Vector6& sigma,
                        const ControlOutput& applied, double dt) {
  const double lim = cfg.integral_limit;
  state.integral_eps =
      (state.integral_eps + eps * dt).cwiseMax(-lim).cwiseMin(lim);
  switch (cfg.kind) {
    case ControllerKind::kAdaptive:
      state.adaptive = adaptive_update(state.adaptive, sigma, dt);
      break;
    case ControllerKind::kSuperTwisting:
      // The super-twisting pair acts on the corrective part only.
      state.u2_integrator = super_twist_u2_step(
          state.u2_integrator, sigma, applied.feedback, cfg.gains, dt);
      break;
    case ControllerKind::kFirstOrder:
      break;
  }
}

}  // namespace auvform
