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

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "auvform/sim_engine.hpp"

namespace auvform {

/// Signed min/max and RMSE of one axis' errors over the evaluation window.
struct AxisMetrics {
  double speed_min = 0.0;
  double speed_max = 0.0;
  double speed_rmse = 0.0;
  double position_min = 0.0;
  double position_max = 0.0;
  double position_rmse = 0.0;
};

/// x, y, z rows.
using AxisTable = std::array<AxisMetrics, 3>;

struct Metrics {
  std::optional<double> convergence_time;
  double window_start = 0.0;
  AxisTable formation;               // pooled over every vehicle
  std::vector<AxisTable> per_vehicle;
};

/// Earliest record time after which |eps| stays below threshold on x, y and z
/// for every vehicle until the end of the log. nullopt if the last record
/// still violates it.
std::optional<double> detect_convergence(const SimLog& log, double threshold);

/// Statistics over records with t >= t_c. Throws ConfigError on an empty
/// window.
Metrics compute_metrics(const SimLog& log, double t_c);

/// (eps, eps_dot) pairs of one vehicle on axis kX, kY or kZ.
std::vector<std::pair<double, double>> phase_trajectory(const SimLog& log,
                                                        std::size_t vehicle,
                                                        Axis axis);

/// Number of consecutive-record sign changes of the vehicle's inertial
/// feedback command on the axis. Zeros do not count as a sign.
std::size_t chatter_count(const SimLog& log, std::size_t vehicle, Axis axis);

/// Mean |u2| on the axis (body frame) over records with t >= t0.
double mean_abs_u2(const SimLog& log, std::size_t vehicle, Axis axis, double t0 = 0.0);

/// Any vehicle position outside the workspace box in any record.
bool leaves_workspace(const SimLog& log, const SimConfig& sim);

}  // namespace auvform
