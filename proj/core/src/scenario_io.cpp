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

#include "auvform/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace auvform {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

/// Read-only view of one JSON object that remembers its path for messages.
class Block {
 public:
  Block(const json& j, std::string path, std::initializer_list<const char*> keys)
      : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j_.items()) {
      if (!allowed.count(k)) fail(path_ + "." + k, "unknown key");
    }
  }

  bool has(const char* key) const { return j_.contains(key); }
  const json& raw(const char* key) const { return j_.at(key); }
  std::string at(const char* key) const { return path_ + "." + key; }

  double num(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number()) fail(at(key), "expected a number");
    return v.get<double>();
  }
  int integer(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number_integer()) fail(at(key), "expected an integer");
    return v.get<int>();
  }
  std::uint64_t uinteger(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number_unsigned()) fail(at(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }
  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_boolean()) fail(at(key), "expected true or false");
    return v.get<bool>();
  }
  std::string str(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) fail(at(key), "expected a string");
    return v.get<std::string>();
  }
  template <int N>
  Eigen::Matrix<double, N, 1> vec(const char* key,
                                  const Eigen::Matrix<double, N, 1>& fallback) const {
    if (!has(key)) return fallback;
    return read_vec<N>(j_.at(key), at(key));
  }

  template <int N>
  static Eigen::Matrix<double, N, 1> read_vec(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(N)) {
      fail(path, "expected an array of " + std::to_string(N) + " numbers");
    }
    Eigen::Matrix<double, N, 1> out;
    for (int i = 0; i < N; ++i) {
      if (!v[i].is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
      out(i) = v[i].get<double>();
    }
    return out;
  }

 private:
  const json& j_;
  std::string path_;
};

template <typename Derived>
ojson to_array(const Eigen::MatrixBase<Derived>& v) {
  ojson a = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

RigidBodyParams parse_params(const json& j, const std::string& path) {
  Block b(j, path,
          {"inertia_kg", "linear_damping", "quadratic_damping", "weight_n",
           "buoyancy_n", "center_of_gravity_m", "center_of_buoyancy_m",
           "mismatch_factor"});
  RigidBodyParams p = RigidBodyParams::small_auv();
  if (b.has("inertia_kg")) {
    const json& m = b.raw("inertia_kg");
    if (!m.is_array() || m.size() != 6) fail(b.at("inertia_kg"), "expected 6 rows of 6 numbers");
    for (int r = 0; r < 6; ++r) {
      p.inertia.row(r) =
          Block::read_vec<6>(m[r], b.at("inertia_kg") + "[" + std::to_string(r) + "]")
              .transpose();
    }
  }
  p.linear_damping = b.vec<6>("linear_damping", p.linear_damping);
  p.quadratic_damping = b.vec<6>("quadratic_damping", p.quadratic_damping);
  p.weight = b.num("weight_n", p.weight);
  p.buoyancy = b.num("buoyancy_n", p.buoyancy);
  p.center_of_gravity = b.vec<3>("center_of_gravity_m", p.center_of_gravity);
  p.center_of_buoyancy = b.vec<3>("center_of_buoyancy_m", p.center_of_buoyancy);
  p.mismatch_factor = b.num("mismatch_factor", p.mismatch_factor);
  return p;
}

ThrusterConfig parse_thrusters(const json& j, const std::string& path) {
  Block b(j, path,
          {"k1", "k2", "k3", "l1", "l2", "t1", "t2", "t3", "t4", "r1_m", "r2_m",
           "r3_m", "u_limit_n"});
  ThrusterConfig t;
  t.k1 = b.num("k1", t.k1);
  t.k2 = b.num("k2", t.k2);
  t.k3 = b.num("k3", t.k3);
  t.l1 = b.num("l1", t.l1);
  t.l2 = b.num("l2", t.l2);
  t.t1 = b.num("t1", t.t1);
  t.t2 = b.num("t2", t.t2);
  t.t3 = b.num("t3", t.t3);
  t.t4 = b.num("t4", t.t4);
  t.r1 = b.num("r1_m", t.r1);
  t.r2 = b.num("r2_m", t.r2);
  t.r3 = b.num("r3_m", t.r3);
  t.u_limit = b.num("u_limit_n", t.u_limit);
  return t;
}

VehicleSpec parse_vehicle(const json& j, const std::string& path,
                          const VehicleState& fallback) {
  Block b(j, path,
          {"position_m", "euler_rad", "linear_velocity_m_s",
           "angular_velocity_rad_s", "params", "thrusters"});
  VehicleSpec v;
  v.initial.position = b.vec<3>("position_m", fallback.position);
  v.initial.euler = b.vec<3>("euler_rad", fallback.euler);
  v.initial.linear_velocity = b.vec<3>("linear_velocity_m_s", fallback.linear_velocity);
  v.initial.angular_velocity =
      b.vec<3>("angular_velocity_rad_s", fallback.angular_velocity);
  if (b.has("params")) v.params = parse_params(b.raw("params"), b.at("params"));
  if (b.has("thrusters")) v.thrusters = parse_thrusters(b.raw("thrusters"), b.at("thrusters"));
  return v;
}

TrajectorySpec parse_trajectory(const json& j) {
  Block b(j, "scenario.trajectory",
          {"kind", "duration_s", "center_m", "radius_m", "angular_rate_rad_s",
           "vertical_rate_m_s", "start_m", "velocity_m_s", "yaw_rad", "waypoints_m",
           "speed_m_s"});
  TrajectorySpec t;
  const std::string kind = b.str("kind", "spiral");
  if (kind == "spiral") {
    t.kind = TrajectoryKind::kSpiral;
  } else if (kind == "line") {
    t.kind = TrajectoryKind::kLine;
  } else if (kind == "waypoints") {
    t.kind = TrajectoryKind::kWaypoints;
  } else {
    fail(b.at("kind"), "expected spiral, line or waypoints");
  }
  t.duration = b.num("duration_s", t.duration);
  t.center = b.vec<3>("center_m", t.center);
  t.radius = b.num("radius_m", t.radius);
  t.angular_rate = b.num("angular_rate_rad_s", t.angular_rate);
  t.vertical_rate = b.num("vertical_rate_m_s", t.vertical_rate);
  t.start = b.vec<3>("start_m", t.start);
  t.velocity = b.vec<3>("velocity_m_s", t.velocity);
  t.yaw = b.num("yaw_rad", t.yaw);
  if (b.has("waypoints_m")) {
    const json& w = b.raw("waypoints_m");
    if (!w.is_array()) fail(b.at("waypoints_m"), "expected an array of points");
    for (std::size_t i = 0; i < w.size(); ++i) {
      t.waypoints.push_back(
          Block::read_vec<3>(w[i], b.at("waypoints_m") + "[" + std::to_string(i) + "]"));
    }
  }
  t.speed = b.num("speed_m_s", t.speed);
  return t;
}

FormationSpec parse_formation(const json& j) {
  Block b(j, "scenario.formation", {"followers"});
  FormationSpec f;
  if (b.has("followers")) {
    const json& arr = b.raw("followers");
    if (!arr.is_array()) fail(b.at("followers"), "expected an array");
    f.followers.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Block s(arr[i], b.at("followers") + "[" + std::to_string(i) + "]",
              {"offset_m", "yaw_offset_rad"});
      FormationSlot slot;
      if (!s.has("offset_m")) fail(s.at("offset_m"), "missing required key");
      slot.offset = s.vec<3>("offset_m", slot.offset);
      slot.yaw_offset = s.num("yaw_offset_rad", slot.yaw_offset);
      f.followers.push_back(slot);
    }
  }
  return f;
}

ControllerConfig parse_controller(const json& j) {
  Block b(j, "scenario.controller",
          {"kind", "u1_form", "lambda_s", "lambda", "rho", "w_gain", "sigma0",
           "u_max", "phi", "gamma_upper", "gamma_lower", "k_gain", "gamma",
           "f_est_initial", "f_est_limit", "baseline_lambda", "baseline_w_gain",
           "integral_limit", "rate_divider"});
  ControllerConfig c;
  try {
    c.kind = controller_kind_from_string(b.str("kind", to_string(c.kind)));
  } catch (const ConfigError& e) {
    fail(b.at("kind"), e.what());
  }
  const std::string form = b.str("u1_form", "equivalent");
  if (form == "equivalent") {
    c.u1_form = U1Form::kEquivalent;
  } else if (form == "saturated") {
    c.u1_form = U1Form::kSaturated;
  } else {
    fail(b.at("u1_form"), "expected equivalent or saturated");
  }
  c.surface.lambda_s = b.vec<6>("lambda_s", c.surface.lambda_s);
  c.gains.lambda = b.num("lambda", c.gains.lambda);
  c.gains.rho = b.num("rho", c.gains.rho);
  c.gains.w_gain = b.num("w_gain", c.gains.w_gain);
  c.gains.sigma0 = b.num("sigma0", c.gains.sigma0);
  c.gains.u_max = b.num("u_max", c.gains.u_max);
  c.gains.phi = b.num("phi", c.gains.phi);
  c.gains.gamma_big = b.num("gamma_upper", c.gains.gamma_big);
  c.gains.gamma_small = b.num("gamma_lower", c.gains.gamma_small);
  c.adaptive.k_gain = b.vec<6>("k_gain", c.adaptive.k_gain);
  c.adaptive.gamma = b.vec<6>("gamma", c.adaptive.gamma);
  c.adaptive.f_est = b.vec<6>("f_est_initial", c.adaptive.f_est);
  c.adaptive.f_est_limit = b.num("f_est_limit", c.adaptive.f_est_limit);
  c.baseline.lambda = b.num("baseline_lambda", c.baseline.lambda);
  c.baseline.w_gain = b.num("baseline_w_gain", c.baseline.w_gain);
  c.integral_limit = b.num("integral_limit", c.integral_limit);
  c.rate_divider = b.integer("rate_divider", c.rate_divider);
  return c;
}

void parse_flow(const json& j, Scenario& s) {
  Block b(j, "scenario.flow",
          {"enabled", "b0", "e_amp", "omega_rad_s", "theta0_rad", "c", "k", "layers",
           "disturbance"});
  s.flow_enabled = b.boolean("enabled", s.flow_enabled);
  FlowParams& p = s.flow;
  p.b0 = b.num("b0", p.b0);
  p.e_amp = b.num("e_amp", p.e_amp);
  p.omega = b.num("omega_rad_s", p.omega);
  p.theta0 = b.num("theta0_rad", p.theta0);
  p.c = b.num("c", p.c);
  p.k = b.num("k", p.k);
  if (b.has("layers")) {
    Block l(b.raw("layers"), b.at("layers"),
            {"n_layers", "z_min_m", "z_max_m", "layer_scale", "speed_scale_m_s",
             "speed_cap_m_s", "origin_x_m", "origin_y_m", "length_scale_m"});
    LayeredField& f = s.layers;
    f.n_layers = l.integer("n_layers", f.n_layers);
    f.z_min = l.num("z_min_m", f.z_min);
    f.z_max = l.num("z_max_m", f.z_max);
    if (l.has("layer_scale")) {
      const json& a = l.raw("layer_scale");
      if (!a.is_array()) fail(l.at("layer_scale"), "expected an array of numbers");
      f.layer_scale.clear();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number()) {
          fail(l.at("layer_scale") + "[" + std::to_string(i) + "]", "expected a number");
        }
        f.layer_scale.push_back(a[i].get<double>());
      }
    }
    f.speed_scale = l.num("speed_scale_m_s", f.speed_scale);
    f.speed_cap = l.num("speed_cap_m_s", f.speed_cap);
    f.origin_x = l.num("origin_x_m", f.origin_x);
    f.origin_y = l.num("origin_y_m", f.origin_y);
    f.length_scale = l.num("length_scale_m", f.length_scale);
  }
  if (b.has("disturbance")) {
    Block d(b.raw("disturbance"), b.at("disturbance"),
            {"drag_gain_n_s2_m2", "yaw_gain_n_s", "force_clamp_n"});
    DisturbanceModel& m = s.disturbance;
    m.drag_gain = d.num("drag_gain_n_s2_m2", m.drag_gain);
    m.yaw_gain = d.num("yaw_gain_n_s", m.yaw_gain);
    m.force_clamp = d.num("force_clamp_n", m.force_clamp);
  }
}

MpcConfig parse_mpc(const json& j) {
  Block b(j, "scenario.mpc",
          {"enabled", "n_e", "n_u", "tau_lower", "tau_upper", "state_lower",
           "state_upper", "candidate_count", "rounds", "perturbation", "stride",
           "smoothing"});
  MpcConfig m;
  m.enabled = b.boolean("enabled", m.enabled);
  m.n_e = b.integer("n_e", m.n_e);
  m.n_u = b.integer("n_u", m.n_u);
  m.tau_lower = b.vec<6>("tau_lower", m.tau_lower);
  m.tau_upper = b.vec<6>("tau_upper", m.tau_upper);
  m.state_lower = b.vec<6>("state_lower", m.state_lower);
  m.state_upper = b.vec<6>("state_upper", m.state_upper);
  m.candidate_count = b.integer("candidate_count", m.candidate_count);
  m.rounds = b.integer("rounds", m.rounds);
  m.perturbation = b.num("perturbation", m.perturbation);
  m.stride = b.integer("stride", m.stride);
  const std::string sm = b.str("smoothing", "pairwise");
  if (sm == "pairwise") {
    m.smoothing = SmoothingMode::kPairwise;
  } else if (sm == "delta_u") {
    m.smoothing = SmoothingMode::kDeltaU;
  } else {
    fail(b.at("smoothing"), "expected pairwise or delta_u");
  }
  return m;
}

SimConfig parse_sim(const json& j) {
  Block b(j, "scenario.sim",
          {"dt_s", "duration_s", "seed", "convergence_threshold_m", "workspace_min_m",
           "workspace_max_m"});
  SimConfig c;
  c.dt = b.num("dt_s", c.dt);
  c.duration = b.num("duration_s", c.duration);
  c.seed = b.uinteger("seed", c.seed);
  c.convergence_threshold = b.num("convergence_threshold_m", c.convergence_threshold);
  c.workspace_min = b.vec<3>("workspace_min_m", c.workspace_min);
  c.workspace_max = b.vec<3>("workspace_max_m", c.workspace_max);
  return c;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("parse error at line " + std::to_string(line_of(text, e.byte)) +
                      ": " + e.what());
  }
  Block root(doc, "scenario",
             {"vehicles", "controller", "flow", "trajectory", "formation", "sim",
              "mpc", "baseline", "ideal_actuation"});
  for (const char* required : {"trajectory", "sim"}) {
    if (!root.has(required)) fail(root.at(required), "required block is missing");
  }

  Scenario s;
  s.trajectory = parse_trajectory(root.raw("trajectory"));
  s.sim = parse_sim(root.raw("sim"));
  if (root.has("formation")) s.formation = parse_formation(root.raw("formation"));
  if (root.has("controller")) s.controller = parse_controller(root.raw("controller"));
  if (root.has("flow")) parse_flow(root.raw("flow"), s);
  if (root.has("mpc")) s.mpc = parse_mpc(root.raw("mpc"));
  s.baseline = root.boolean("baseline", false);
  s.ideal_actuation = root.boolean("ideal_actuation", false);

  // Vehicle defaults depend on the trajectory and formation, so they are
  // derived once those are known and valid.
  s.trajectory.validate();
  s.formation.validate();
  const auto defaults =
      default_initial_states(s.trajectory, s.formation, kDefaultStartOffset);
  if (root.has("vehicles")) {
    const json& arr = root.raw("vehicles");
    if (!arr.is_array()) fail(root.at("vehicles"), "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const VehicleState fallback = i < defaults.size() ? defaults[i] : VehicleState{};
      const std::string path = "scenario.vehicles[" + std::to_string(i) + "]";
      if (i >= defaults.size() && !arr[i].contains("position_m")) {
        fail(path + ".position_m", "required for vehicles without a formation slot");
      }
      s.vehicles.push_back(parse_vehicle(arr[i], path, fallback));
    }
  } else {
    for (const auto& init : defaults) {
      s.vehicles.push_back({init, RigidBodyParams::small_auv(), ThrusterConfig{}});
    }
  }
  s.validate();
  return s;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario_text(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string serialize_scenario(const Scenario& s) {
  ojson doc;

  const TrajectorySpec& t = s.trajectory;
  ojson traj;
  traj["kind"] = t.kind == TrajectoryKind::kSpiral ? "spiral"
                 : t.kind == TrajectoryKind::kLine ? "line"
                                                    : "waypoints";
  traj["duration_s"] = t.duration;
  traj["center_m"] = to_array(t.center);
  traj["radius_m"] = t.radius;
  traj["angular_rate_rad_s"] = t.angular_rate;
  traj["vertical_rate_m_s"] = t.vertical_rate;
  traj["start_m"] = to_array(t.start);
  traj["velocity_m_s"] = to_array(t.velocity);
  traj["yaw_rad"] = t.yaw;
  traj["waypoints_m"] = ojson::array();
  for (const auto& w : t.waypoints) traj["waypoints_m"].push_back(to_array(w));
  traj["speed_m_s"] = t.speed;
  doc["trajectory"] = traj;

  ojson sim;
  sim["dt_s"] = s.sim.dt;
  sim["duration_s"] = s.sim.duration;
  sim["seed"] = s.sim.seed;
  sim["convergence_threshold_m"] = s.sim.convergence_threshold;
  sim["workspace_min_m"] = to_array(s.sim.workspace_min);
  sim["workspace_max_m"] = to_array(s.sim.workspace_max);
  doc["sim"] = sim;

  ojson form;
  form["followers"] = ojson::array();
  for (const auto& f : s.formation.followers) {
    form["followers"].push_back(
        ojson{{"offset_m", to_array(f.offset)}, {"yaw_offset_rad", f.yaw_offset}});
  }
  doc["formation"] = form;

  ojson vehicles = ojson::array();
  for (const auto& v : s.vehicles) {
    ojson jv;
    jv["position_m"] = to_array(v.initial.position);
    jv["euler_rad"] = to_array(v.initial.euler);
    jv["linear_velocity_m_s"] = to_array(v.initial.linear_velocity);
    jv["angular_velocity_rad_s"] = to_array(v.initial.angular_velocity);
    ojson p;
    p["inertia_kg"] = ojson::array();
    for (int r = 0; r < 6; ++r) {
      p["inertia_kg"].push_back(to_array(v.params.inertia.row(r).transpose()));
    }
    p["linear_damping"] = to_array(v.params.linear_damping);
    p["quadratic_damping"] = to_array(v.params.quadratic_damping);
    p["weight_n"] = v.params.weight;
    p["buoyancy_n"] = v.params.buoyancy;
    p["center_of_gravity_m"] = to_array(v.params.center_of_gravity);
    p["center_of_buoyancy_m"] = to_array(v.params.center_of_buoyancy);
    p["mismatch_factor"] = v.params.mismatch_factor;
    jv["params"] = p;
    const ThrusterConfig& th = v.thrusters;
    jv["thrusters"] = ojson{{"k1", th.k1},     {"k2", th.k2},     {"k3", th.k3},
                            {"l1", th.l1},     {"l2", th.l2},     {"t1", th.t1},
                            {"t2", th.t2},     {"t3", th.t3},     {"t4", th.t4},
                            {"r1_m", th.r1},   {"r2_m", th.r2},   {"r3_m", th.r3},
                            {"u_limit_n", th.u_limit}};
    vehicles.push_back(jv);
  }
  doc["vehicles"] = vehicles;

  const ControllerConfig& c = s.controller;
  ojson ctrl;
  ctrl["kind"] = to_string(c.kind);
  ctrl["u1_form"] = c.u1_form == U1Form::kEquivalent ? "equivalent" : "saturated";
  ctrl["lambda_s"] = to_array(c.surface.lambda_s);
  ctrl["lambda"] = c.gains.lambda;
  ctrl["rho"] = c.gains.rho;
  ctrl["w_gain"] = c.gains.w_gain;
  ctrl["sigma0"] = c.gains.sigma0;
  ctrl["u_max"] = c.gains.u_max;
  ctrl["phi"] = c.gains.phi;
  ctrl["gamma_upper"] = c.gains.gamma_big;
  ctrl["gamma_lower"] = c.gains.gamma_small;
  ctrl["k_gain"] = to_array(c.adaptive.k_gain);
  ctrl["gamma"] = to_array(c.adaptive.gamma);
  ctrl["f_est_initial"] = to_array(c.adaptive.f_est);
  ctrl["f_est_limit"] = c.adaptive.f_est_limit;
  ctrl["baseline_lambda"] = c.baseline.lambda;
  ctrl["baseline_w_gain"] = c.baseline.w_gain;
  ctrl["integral_limit"] = c.integral_limit;
  ctrl["rate_divider"] = c.rate_divider;
  doc["controller"] = ctrl;

  ojson flow;
  flow["enabled"] = s.flow_enabled;
  flow["b0"] = s.flow.b0;
  flow["e_amp"] = s.flow.e_amp;
  flow["omega_rad_s"] = s.flow.omega;
  flow["theta0_rad"] = s.flow.theta0;
  flow["c"] = s.flow.c;
  flow["k"] = s.flow.k;
  const LayeredField& l = s.layers;
  flow["layers"] = ojson{{"n_layers", l.n_layers},
                         {"z_min_m", l.z_min},
                         {"z_max_m", l.z_max},
                         {"layer_scale", l.layer_scale},
                         {"speed_scale_m_s", l.speed_scale},
                         {"speed_cap_m_s", l.speed_cap},
                         {"origin_x_m", l.origin_x},
                         {"origin_y_m", l.origin_y},
                         {"length_scale_m", l.length_scale}};
  flow["disturbance"] = ojson{{"drag_gain_n_s2_m2", s.disturbance.drag_gain},
                              {"yaw_gain_n_s", s.disturbance.yaw_gain},
                              {"force_clamp_n", s.disturbance.force_clamp}};
  doc["flow"] = flow;

  const MpcConfig& m = s.mpc;
  ojson mpc;
  mpc["enabled"] = m.enabled;
  mpc["n_e"] = m.n_e;
  mpc["n_u"] = m.n_u;
  mpc["tau_lower"] = to_array(m.tau_lower);
  mpc["tau_upper"] = to_array(m.tau_upper);
  mpc["state_lower"] = to_array(m.state_lower);
  mpc["state_upper"] = to_array(m.state_upper);
  mpc["candidate_count"] = m.candidate_count;
  mpc["rounds"] = m.rounds;
  mpc["perturbation"] = m.perturbation;
  mpc["stride"] = m.stride;
  mpc["smoothing"] = m.smoothing == SmoothingMode::kPairwise ? "pairwise" : "delta_u";
  doc["mpc"] = mpc;

  doc["baseline"] = s.baseline;
  doc["ideal_actuation"] = s.ideal_actuation;
  return doc.dump(2) + "\n";
}

}  // namespace auvform
