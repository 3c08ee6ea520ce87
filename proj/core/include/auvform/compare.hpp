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
#include <filesystem>
#include <optional>
#include <ostream>

#include "auvform/metrics.hpp"
#include "auvform/sim_engine.hpp"

namespace auvform {

struct CompareResult {
  SimLog proposed;
  SimLog baseline;
  std::optional<double> proposed_tc;
  std::optional<double> baseline_tc;
  /// Both runs are scored over the same window: from the later of the two
  /// convergence times, or from t = 0 if either run never converged.
  double window_start = 0.0;
  Metrics proposed_metrics;
  Metrics baseline_metrics;
  std::array<double, 3> position_rmse_ratio{};  // proposed / baseline, x y z
  std::array<double, 3> speed_rmse_ratio{};
  std::size_t proposed_chatter = 0;  // x and y, summed over vehicles
  std::size_t baseline_chatter = 0;

  /// Proposed x and y position RMSE strictly below the baseline's.
  bool proposed_tracks_better() const;
  /// Proposed chatter count at most half the baseline's.
  bool proposed_chatters_less() const;
};

/// Runs the scenario as given and its first-order baseline variant with the
/// same seed and flow, the two in parallel.
CompareResult compare_runs(const Scenario& scenario);

/// metric, proposed, baseline, ratio rows.
void write_compare_summary(std::ostream& os, const CompareResult& r);

/// t, vehicle, then eps_{x,y,z} and eps_dot_{x,y,z} for proposed and baseline.
void write_compare_series(std::ostream& os, const CompareResult& r);

/// compare_summary.csv and compare_series.csv into out_dir, plus each run's
/// full export bundle under proposed/ and baseline/.
void export_compare(const CompareResult& r, const std::filesystem::path& out_dir);

}  // namespace auvform
