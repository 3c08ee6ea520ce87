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

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "auvform/flow_field.hpp"
#include "auvform/metrics.hpp"
#include "auvform/sim_engine.hpp"

namespace auvform {

/// Shortest decimal that reads back to the same double.
std::string format_number(double x);

/// Column names of the time-series table, in order.
std::vector<std::string> timeseries_columns();

/// One row per record per vehicle.
void write_timeseries(std::ostream& os, const SimLog& log);

/// axis, speed_min, speed_max, speed_rmse, position_min, position_max,
/// position_rmse. Header only when `metrics` is empty.
void write_metrics(std::ostream& os, const std::optional<Metrics>& metrics);

/// Same columns prefixed with the vehicle index.
void write_vehicle_metrics(std::ostream& os, const std::optional<Metrics>& metrics);

/// t, vehicle, e, de for one axis.
void write_phase(std::ostream& os, const SimLog& log, Axis axis);

/// key,value pairs: convergence time, window start, abort state, chatter.
void write_summary(std::ostream& os, const SimLog& log,
                   const std::optional<Metrics>& metrics);

/// Writes timeseries.csv, metrics.csv, metrics_vehicles.csv, phase_x.csv,
/// phase_y.csv, phase_z.csv and summary.csv into out_dir (created if needed).
/// Throws RuntimeAbort if a file cannot be written.
void export_results(const SimLog& log, const std::optional<Metrics>& metrics,
                    const std::filesystem::path& out_dir);

/// Rows (x, y, z, t, U, V, W) at 1 m spacing over the workspace box for each
/// sample time, W = 0.
void write_flow_grid(std::ostream& os, const FlowParams& params,
                     const LayeredField& layers, const std::vector<double>& t_samples,
                     const Vector3& lo, const Vector3& hi);

void export_flow_grid(const FlowParams& params, const LayeredField& layers,
                      const std::vector<double>& t_samples, const Vector3& lo,
                      const Vector3& hi, const std::filesystem::path& out);

}  // namespace auvform
