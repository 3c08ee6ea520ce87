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

#include "auvform/sim_engine.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace auvform {

std::size_t SimConfig::steps() const {
  return static_cast<std::size_t>(std::llround(duration / dt));
}

void Scenario::validate() const {
  if (!(sim.dt > 0.0) || !std::isfinite(sim.dt)) throw ConfigError("sim dt must be > 0");
  if (!(sim.duration >= sim.dt) || !std::isfinite(sim.duration)) {
    throw ConfigError("sim duration must be >= dt");
  }
  if (!(sim.convergence_threshold > 0.0)) {
    throw ConfigError("convergence threshold must be > 0");
  }
  if ((sim.workspace_min.array() >= sim.workspace_max.array()).any()) {
    throw ConfigError("workspace bounds must satisfy min < max on every axis");
  }
  if (vehicles.empty()) throw ConfigError("scenario needs at least the leader");
  if (vehicles.size() != formation.followers.size() + 1) {
    throw ConfigError("scenario has " + std::to_string(vehicles.size()) +
                      " vehicles but the formation has " +
                      std::to_string(formation.followers.size()) + " follower slots");
  }
  for (std::size_t i = 0; i < vehicles.size(); ++i) {
    const auto& v = vehicles[i];
    v.params.validate();
    v.thrusters.validate();
    if (!v.initial.is_finite()) {
      throw ConfigError("vehicle " + std::to_string(i) + " initial state is not finite");
    }
    if (!(std::abs(v.initial.euler.y()) < std::numbers::pi / 2 - kPitchSingularityTol)) {
      throw ConfigError("vehicle " + std::to_string(i) +
                        " starts at the pitch singularity");
    }
    const Vector3& p = v.initial.position;
    if ((p.array() < sim.workspace_min.array()).any() ||
        (p.array() > sim.workspace_max.array()).any()) {
      throw ConfigError("vehicle " + std::to_string(i) +
                        " starts outside the workspace bounds");
    }
  }
  controller.validate();
  mpc.validate();
  flow.validate();
  layers.validate();
  disturbance.validate();
  trajectory.validate();
  formation.validate();
  if (sim.duration > trajectory.duration + 1e-9) {
    throw ConfigError("sim duration exceeds the trajectory duration");
  }
}

std::vector<VehicleState> default_initial_states(const TrajectorySpec& traj,
                                                 const FormationSpec& formation,
                                                 const Vector3& offset) {
  const Reference r0 = leader_reference(0.0, traj);
  VehicleState leader;
  leader.position = r0.pose.head<3>();
  leader.euler.z() = r0.pose(kYaw);
  std::vector<VehicleState> out{leader};
  for (const auto& slot : formation.followers) {
    const Reference rf = follower_reference(leader, r0.rate, slot);
    VehicleState f;
    f.position = rf.pose.head<3>();
    f.euler.z() = rf.pose(kYaw);
    out.push_back(f);
  }
  for (auto& s : out) s.position += offset;
  return out;
}

Scenario default_spiral_scenario() {
  Scenario s;
  for (const auto& init :
       default_initial_states(s.trajectory, s.formation, kDefaultStartOffset)) {
    s.vehicles.push_back({init, RigidBodyParams::small_auv(), ThrusterConfig{}});
  }
  return s;
}

Vector3 current_at(const Scenario& s, const Vector3& position, double t) {
  if (!s.flow_enabled) return Vector3::Zero();
  if ((position.array() < s.sim.workspace_min.array()).any() ||
      (position.array() > s.sim.workspace_max.array()).any()) {
    return Vector3::Zero();
  }
  return layered_velocity(position.x(), position.y(), position.z(), t, s.layers, s.flow);
}

Scenario baseline_variant(const Scenario& s) {
  Scenario b = s;
  b.baseline = true;
  b.controller.kind = ControllerKind::kFirstOrder;
  b.mpc.enabled = false;
  return b;
}

namespace {

Matrix6 diag(const Vector6& v) { return v.asDiagonal(); }

}  // namespace

SimRuntime::SimRuntime(const Scenario& scenario) : scenario_(scenario) {
  if (scenario_.baseline) scenario_ = baseline_variant(scenario_);
  scenario_.validate();
  for (std::size_t i = 0; i < scenario_.vehicles.size(); ++i) {
    const auto& spec = scenario_.vehicles[i];
    plants_.emplace_back(spec.params);
    models_.emplace_back(spec.params.estimated());
    allocators_.emplace_back(spec.thrusters);
    VehicleRuntime vr;
    vr.state = spec.initial;
    vr.controller.adaptive = scenario_.controller.adaptive;
    vehicles_.push_back(vr);

    if (scenario_.flow_enabled) {
      const Scenario* sc = &scenario_;
      disturbances_.push_back([sc](double t, const VehicleState& st) {
        const Vector3 flow = current_at(*sc, st.position, t);
        return disturbance_to_tau_c(disturbance_wrench(flow, st, sc->disturbance), st);
      });
    } else {
      disturbances_.push_back(
          [](double, const VehicleState&) { return Wrench6::body(Vector6::Zero()); });
    }
  }
}

VehicleRecord SimRuntime::control_vehicle(std::size_t i, const Reference& ref) {
  const Scenario& sc = scenario_;
  const ControllerConfig& cc = sc.controller;
  VehicleRuntime& vr = vehicles_[i];
  const VehicleState& st = vr.state;
  const RigidBodyParams& params = sc.vehicles[i].params;
  const RigidBodyParams est = params.estimated();
  const double dt = sc.sim.dt;

  VehicleRecord rec;
  rec.state = st;
  const TrackingError te = tracking_error(st, ref);
  rec.eps = te.eps;
  rec.eps_dot = te.eps_dot;
  rec.sigma = sliding_surface(te.eps, te.eps_dot, vr.controller.integral_eps, cc.surface);

  const Vector6 e_dot_r =
      reference_rate(ref.rate, te.eps, vr.controller.integral_eps, cc.surface);
  const Vector6 e_ddot_r =
      reference_acceleration(ref.accel, te.eps, te.eps_dot, cc.surface);
  const JacobianSet jac = kinematic_transform(st);
  const InertialDynamicsTerms est_terms = dynamics_inertial_terms(st, est);
  const InertialDynamicsTerms true_terms = dynamics_inertial_terms(st, params);
  const Vector6 f_hat_r = reference_dynamics(st, e_dot_r, e_ddot_r, est);
  const Vector6 f_r = reference_dynamics(st, e_dot_r, e_ddot_r, params);

  const bool control_tick = k_ % static_cast<std::size_t>(cc.rate_divider) == 0;
  if (control_tick) {
    vr.held = compute_control(cc, vr.controller, rec.sigma, f_hat_r, est_terms.c_e, jac);
    if (!sc.mpc.enabled) {
      vr.command = vr.held.total;
    } else if (!vr.mpc_plan.empty() &&
               (solves_ % static_cast<std::uint64_t>(sc.mpc.stride)) != 0) {
      vr.command = vr.mpc_plan.front();
      vr.mpc_plan.erase(vr.mpc_plan.begin());
    } else {
      MpcConfig mc = sc.mpc;
      mc.seed = sc.sim.seed * 1000003ULL + i;
      MpcTarget target;
      for (int k = 1; k <= mc.n_e; ++k) {
        target.pose.push_back(ref.pose + (k * dt) * ref.rate);
        target.rate.push_back(e_dot_r);
      }
      const ControlSequence nominal(mc.sequence_length(), vr.held.total);
      static const DisturbanceFn kNoDisturbance = [](double, const VehicleState&) {
        return Wrench6::body(Vector6::Zero());
      };
      const MpcSolution sol = mpc_optimize(st, target, nominal, models_[i],
                                           kNoDisturbance, mc, time(), dt, k_);
      vr.command = sol.sequence.front();
      vr.mpc_plan.assign(sol.sequence.begin() + 1, sol.sequence.end());
      rec.mpc_feasible = sol.feasible;
    }
  }
  rec.u1 = vr.held.u1;
  rec.u2 = vr.held.u2;
  rec.u_command = vr.command;

  if (sc.ideal_actuation) {
    rec.u_applied = vr.command;
  } else {
    const AllocationResult alloc =
        allocators_[i].allocate(Wrench5::from_body6(vr.command));
    rec.thrust = alloc.thrust;
    rec.residual = alloc.residual;
    rec.u_applied = wrench_from_thrust(alloc.thrust, sc.vehicles[i].thrusters).to_body6();
  }

  if (sc.flow_enabled) {
    rec.flow = current_at(sc, st.position, time());
  }
  const Wrench6 dist = disturbance_wrench(rec.flow, st, sc.disturbance);
  rec.disturbance = sc.flow_enabled ? dist.value : Vector6::Zero();
  const Vector6 tau_c = sc.flow_enabled ? disturbance_to_tau_c(dist, st).value
                                        : Vector6::Zero();

  const Matrix6 j_inv_t = jacobian_inverse(st).transpose();
  rec.feedback = j_inv_t * vr.command - f_hat_r;
  rec.f_est = vr.controller.adaptive.f_est;
  rec.f_tilde = f_r - f_hat_r + j_inv_t * (tau_c + vr.command - rec.u_applied);

  const Vector6 w = rec.f_est - rec.f_tilde;
  const Matrix6 gamma = diag(vr.controller.adaptive.gamma);
  rec.lyapunov = lyapunov_value(rec.sigma, w, true_terms.m_e, gamma);
  const Vector6 f_tilde_dot =
      vr.has_prev ? Vector6((rec.f_tilde - vr.prev_f_tilde) / dt) : Vector6::Zero();
  rec.assumption = assumption_holds(rec.sigma, w, f_tilde_dot,
                                    true_terms.m_e - est_terms.m_e,
                                    diag(vr.controller.adaptive.k_gain), gamma);
  vr.prev_f_tilde = rec.f_tilde;
  return rec;
}

StepRecord SimRuntime::step(bool advance) {
  const Scenario& sc = scenario_;
  const double dt = sc.sim.dt;
  StepRecord out;
  out.t = time();

  std::vector<Reference> refs(vehicles_.size());
  refs[0] = leader_reference(out.t, sc.trajectory);
  if (vehicles_.size() > 1) {
    const VehicleState& leader = vehicles_[0].state;
    const Vector6 leader_rates = pose_rate(leader);
    for (std::size_t i = 1; i < vehicles_.size(); ++i) {
      refs[i] = follower_reference(leader, leader_rates, sc.formation.followers[i - 1]);
      VehicleRuntime& vr = vehicles_[i];
      if (vr.has_prev) refs[i].accel = (refs[i].rate - vr.prev_rate_d) / dt;
    }
  }

  for (std::size_t i = 0; i < vehicles_.size(); ++i) {
    out.vehicles.push_back(control_vehicle(i, refs[i]));
  }
  const bool control_tick =
      k_ % static_cast<std::size_t>(sc.controller.rate_divider) == 0;
  if (control_tick && sc.mpc.enabled) ++solves_;
  for (std::size_t i = 0; i < vehicles_.size(); ++i) {
    vehicles_[i].prev_rate_d = refs[i].rate;
    vehicles_[i].has_prev = true;
  }
  if (!advance) return out;

  for (std::size_t i = 0; i < vehicles_.size(); ++i) {
    VehicleRuntime& vr = vehicles_[i];
    const VehicleRecord& rec = out.vehicles[i];
    vr.state = plants_[i].step(vr.state, Wrench6::body(rec.u_applied),
                               disturbances_[i], out.t, dt);
    if (!vr.state.is_finite()) {
      throw RuntimeAbort("vehicle " + std::to_string(i) +
                         " state became non-finite at t = " + std::to_string(out.t));
    }
    if (control_tick) {
      advance_controller(sc.controller, vr.controller, rec.eps, rec.sigma, vr.held,
                         dt * sc.controller.rate_divider);
    }
  }
  ++k_;
  t_ = static_cast<double>(k_) * dt;
  return out;
}

SimLog run(const Scenario& scenario) {
  SimRuntime rt(scenario);
  SimLog log;
  const std::size_t n = scenario.sim.steps();
  log.records.reserve(n + 1);
  try {
    for (std::size_t k = 0; k <= n; ++k) log.records.push_back(rt.step(k < n));
  } catch (const SingularityError& e) {
    log.aborted = true;
    log.abort_reason = e.what();
  } catch (const RuntimeAbort& e) {
    log.aborted = true;
    log.abort_reason = e.what();
  }
  return log;
}

}  // namespace auvform
