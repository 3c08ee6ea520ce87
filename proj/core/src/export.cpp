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

#include "auvform/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace auvform {
namespace {

const char* const kPose[] = {"x", "y", "z", "phi", "theta", "psi"};
const char* const kWrench[] = {"X", "Y", "Z", "K", "M", "N"};
const char* const kVel[] = {"u", "v", "w", "p", "q", "r"};
const char* const kWrench5[] = {"u", "v", "r", "w", "q"};
const char* const kAxes[] = {"x", "y", "z"};

void header(std::ostream& os, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
}

template <typename Derived>
void put(std::ostream& os, const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) os << ',' << format_number(v(i));
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p, std::ios::binary | std::ios::trunc);
  if (!os) throw RuntimeAbort("cannot write " + p.string());
  return os;
}

void check(std::ofstream& os, const std::filesystem::path& p) {
  os.flush();
  if (!os) throw RuntimeAbort("failed writing " + p.string());
}

void axis_row(std::ostream& os, const AxisMetrics& m) {
  os << ',' << format_number(m.speed_min) << ',' << format_number(m.speed_max) << ','
     << format_number(m.speed_rmse) << ',' << format_number(m.position_min) << ','
     << format_number(m.position_max) << ',' << format_number(m.position_rmse) << '\n';
}

const std::vector<std::string> kMetricCols = {"speed_min",    "speed_max",
                                              "speed_rmse",   "position_min",
                                              "position_max", "position_rmse"};

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> timeseries_columns() {
  std::vector<std::string> c = {"t", "vehicle"};
  auto add = [&c](const std::string& prefix, const char* const* names, int n) {
    for (int i = 0; i < n; ++i) c.push_back(prefix + names[i]);
  };
  add("", kPose, 6);
  add("", kVel, 6);
  add("eps_", kPose, 6);
  add("eps_dot_", kPose, 6);
  add("sigma_", kPose, 6);
  add("u1_", kWrench, 6);
  add("u2_", kWrench, 6);
  add("ucmd_", kWrench, 6);
  c.insert(c.end(), {"thrust_1", "thrust_2", "thrust_3"});
  add("uapp_", kWrench, 6);
  add("residual_", kWrench5, 5);
  add("feedback_", kPose, 6);
  add("f_est_", kPose, 6);
  add("f_tilde_", kPose, 6);
  c.insert(c.end(), {"lyapunov", "assumption", "mpc_feasible", "flow_u", "flow_v",
                     "flow_w"});
  add("dist_", kPose, 6);
  return c;
}

void write_timeseries(std::ostream& os, const SimLog& log) {
  header(os, timeseries_columns());
  for (const auto& r : log.records) {
    for (std::size_t i = 0; i < r.vehicles.size(); ++i) {
      const VehicleRecord& v = r.vehicles[i];
      os << format_number(r.t) << ',' << i;
      put(os, v.state.pose());
      put(os, v.state.velocity());
      put(os, v.eps);
      put(os, v.eps_dot);
      put(os, v.sigma);
      put(os, v.u1);
      put(os, v.u2);
      put(os, v.u_command);
      put(os, v.thrust);
      put(os, v.u_applied);
      put(os, v.residual);
      put(os, v.feedback);
      put(os, v.f_est);
      put(os, v.f_tilde);
      os << ',' << format_number(v.lyapunov) << ',' << (v.assumption ? 1 : 0) << ','
         << (v.mpc_feasible ? 1 : 0);
      put(os, v.flow);
      put(os, v.disturbance);
      os << '\n';
    }
  }
}

void write_metrics(std::ostream& os, const std::optional<Metrics>& metrics) {
  std::vector<std::string> cols = {"axis"};
  cols.insert(cols.end(), kMetricCols.begin(), kMetricCols.end());
  header(os, cols);
  if (!metrics) return;
  for (int a = 0; a < 3; ++a) {
    os << kAxes[a];
    axis_row(os, metrics->formation[a]);
  }
}

void write_vehicle_metrics(std::ostream& os, const std::optional<Metrics>& metrics) {
  std::vector<std::string> cols = {"vehicle", "axis"};
  cols.insert(cols.end(), kMetricCols.begin(), kMetricCols.end());
  header(os, cols);
  if (!metrics) return;
  for (std::size_t i = 0; i < metrics->per_vehicle.size(); ++i) {
    for (int a = 0; a < 3; ++a) {
      os << i << ',' << kAxes[a];
      axis_row(os, metrics->per_vehicle[i][a]);
    }
  }
}

void write_phase(std::ostream& os, const SimLog& log, Axis axis) {
  header(os, {"t", "vehicle", "e", "de"});
  for (const auto& r : log.records) {
    for (std::size_t i = 0; i < r.vehicles.size(); ++i) {
      os << format_number(r.t) << ',' << i << ','
         << format_number(r.vehicles[i].eps(axis)) << ','
         << format_number(r.vehicles[i].eps_dot(axis)) << '\n';
    }
  }
}

void write_summary(std::ostream& os, const SimLog& log,
                   const std::optional<Metrics>& metrics) {
  header(os, {"key", "value"});
  const bool converged = metrics && metrics->convergence_time;
  os << "records," << log.records.size() << '\n';
  os << "converged," << (converged ? 1 : 0) << '\n';
  os << "convergence_time_s,"
     << (converged ? format_number(*metrics->convergence_time) : "") << '\n';
  os << "window_start_s," << (metrics ? format_number(metrics->window_start) : "")
     << '\n';
  std::size_t chatter = 0;
  const std::size_t nv = log.records.empty() ? 0 : log.records.front().vehicles.size();
  for (std::size_t i = 0; i < nv; ++i) {
    chatter += chatter_count(log, i, kX) + chatter_count(log, i, kY);
  }
  os << "chatter_xy," << chatter << '\n';
  os << "aborted," << (log.aborted ? 1 : 0) << '\n';
  // Commas would break the two-column layout.
  std::string reason = log.abort_reason;
  for (char& ch : reason) {
    if (ch == ',' || ch == '\n') ch = ';';
  }
  os << "abort_reason," << reason << '\n';
}

void export_results(const SimLog& log, const std::optional<Metrics>& metrics,
                    const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw RuntimeAbort("cannot create " + out_dir.string() + ": " + ec.message());

  auto emit = [&out_dir](const char* name, auto&& writer) {
    const auto p = out_dir / name;
    auto os = open_out(p);
    writer(os);
    check(os, p);
  };
  emit("timeseries.csv", [&](std::ostream& os) { write_timeseries(os, log); });
  emit("metrics.csv", [&](std::ostream& os) { write_metrics(os, metrics); });
  emit("metrics_vehicles.csv",
       [&](std::ostream& os) { write_vehicle_metrics(os, metrics); });
  emit("phase_x.csv", [&](std::ostream& os) { write_phase(os, log, kX); });
  emit("phase_y.csv", [&](std::ostream& os) { write_phase(os, log, kY); });
  emit("phase_z.csv", [&](std::ostream& os) { write_phase(os, log, kZ); });
  emit("summary.csv", [&](std::ostream& os) { write_summary(os, log, metrics); });
}

void write_flow_grid(std::ostream& os, const FlowParams& params,
                     const LayeredField& layers, const std::vector<double>& t_samples,
                     const Vector3& lo, const Vector3& hi) {
  header(os, {"x", "y", "z", "t", "U", "V", "W"});
  const Vector3 start = lo.array().ceil();
  for (double t : t_samples) {
    for (double z = start.z(); z <= hi.z(); z += 1.0) {
      for (double y = start.y(); y <= hi.y(); y += 1.0) {
        for (double x = start.x(); x <= hi.x(); x += 1.0) {
          const Vector3 v = layered_velocity(x, y, z, t, layers, params);
          os << format_number(x) << ',' << format_number(y) << ',' << format_number(z)
             << ',' << format_number(t) << ',' << format_number(v.x()) << ','
             << format_number(v.y()) << ",0\n";
        }
      }
    }
  }
}

void export_flow_grid(const FlowParams& params, const LayeredField& layers,
                      const std::vector<double>& t_samples, const Vector3& lo,
                      const Vector3& hi, const std::filesystem::path& out) {
  if (out.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(out.parent_path(), ec);
  }
  auto os = open_out(out);
  write_flow_grid(os, params, layers, t_samples, lo, hi);
  check(os, out);
}

}  // namespace auvform
