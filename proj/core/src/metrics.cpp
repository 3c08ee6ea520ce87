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

#include "auvform/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace auvform {

std::optional<double> detect_convergence(const SimLog& log, double threshold) {
  const auto& recs = log.records;
  for (std::size_t n = recs.size(); n-- > 0;) {
    bool ok = true;
    for (const auto& v : recs[n].vehicles) {
      for (int a = kX; a <= kZ; ++a) ok = ok && std::abs(v.eps(a)) < threshold;
    }
    if (!ok) {
      if (n + 1 == recs.size()) return std::nullopt;
      return recs[n + 1].t;
    }
  }
  if (recs.empty()) return std::nullopt;
  return recs.front().t;
}

namespace {

struct Accumulator {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double x) {
    min = std::min(min, x);
    max = std::max(max, x);
    sum_sq += x * x;
    ++n;
  }
  double rmse() const { return std::sqrt(sum_sq / static_cast<double>(n)); }
};

AxisTable finish(const std::array<Accumulator, 3>& speed,
                 const std::array<Accumulator, 3>& pos) {
  AxisTable t;
  for (int a = 0; a < 3; ++a) {
    t[a] = {speed[a].min, speed[a].max, speed[a].rmse(),
            pos[a].min,   pos[a].max,   pos[a].rmse()};
  }
  return t;
}

}  // namespace

Metrics compute_metrics(const SimLog& log, double t_c) {
  const auto& recs = log.records;
  auto first = std::find_if(recs.begin(), recs.end(),
                            [t_c](const StepRecord& r) { return r.t >= t_c - 1e-12; });
  if (first == recs.end() || first->vehicles.empty()) {
    throw ConfigError("metrics window starting at t = " + std::to_string(t_c) +
                      " is empty");
  }
  const std::size_t nv = first->vehicles.size();
  std::array<Accumulator, 3> all_speed, all_pos;
  std::vector<std::array<Accumulator, 3>> v_speed(nv), v_pos(nv);
  for (auto it = first; it != recs.end(); ++it) {
    for (std::size_t i = 0; i < nv; ++i) {
      const auto& v = it->vehicles[i];
      for (int a = 0; a < 3; ++a) {
        all_speed[a].add(v.eps_dot(a));
        all_pos[a].add(v.eps(a));
        v_speed[i][a].add(v.eps_dot(a));
        v_pos[i][a].add(v.eps(a));
      }
    }
  }
  Metrics m;
  m.window_start = first->t;
  m.formation = finish(all_speed, all_pos);
  for (std::size_t i = 0; i < nv; ++i) m.per_vehicle.push_back(finish(v_speed[i], v_pos[i]));
  return m;
}

std::vector<std::pair<double, double>> phase_trajectory(const SimLog& log,
                                                        std::size_t vehicle,
                                                        Axis axis) {
  if (axis > kZ) throw ConfigError("phase trajectories are defined for x, y and z");
  std::vector<std::pair<double, double>> out;
  out.reserve(log.records.size());
  for (const auto& r : log.records) {
    const auto& v = r.vehicles.at(vehicle);
    out.emplace_back(v.eps(axis), v.eps_dot(axis));
  }
  return out;
}

std::size_t chatter_count(const SimLog& log, std::size_t vehicle, Axis axis) {
  std::size_t flips = 0;
  int last = 0;
  for (const auto& r : log.records) {
    const int s = static_cast<int>(sgn(r.vehicles.at(vehicle).feedback(axis)));
    if (s == 0) continue;
    if (last != 0 && s != last) ++flips;
    last = s;
  }
  return flips;
}

double mean_abs_u2(const SimLog& log, std::size_t vehicle, Axis axis, double t0) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : log.records) {
    if (r.t < t0) continue;
    sum += std::abs(r.vehicles.at(vehicle).u2(axis));
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

bool leaves_workspace(const SimLog& log, const SimConfig& sim) {
  for (const auto& r : log.records) {
    for (const auto& v : r.vehicles) {
      const Vector3& p = v.state.position;
      if ((p.array() < sim.workspace_min.array()).any() ||
          (p.array() > sim.workspace_max.array()).any()) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace auvform
