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

#include "auvform/compare.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <limits>

#include "auvform/export.hpp"

namespace auvform {
namespace {

std::size_t xy_chatter(const SimLog& log) {
  std::size_t n = 0;
  const std::size_t nv = log.records.empty() ? 0 : log.records.front().vehicles.size();
  for (std::size_t i = 0; i < nv; ++i) n += chatter_count(log, i, kX) + chatter_count(log, i, kY);
  return n;
}

double ratio(double a, double b) {
  if (b == 0.0) return a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return a / b;
}

}  // namespace

bool CompareResult::proposed_tracks_better() const {
  return proposed_metrics.formation[0].position_rmse <
             baseline_metrics.formation[0].position_rmse &&
         proposed_metrics.formation[1].position_rmse <
             baseline_metrics.formation[1].position_rmse;
}

bool CompareResult::proposed_chatters_less() const {
  return 2 * proposed_chatter <= baseline_chatter;
}

CompareResult compare_runs(const Scenario& scenario) {
  scenario.validate();
  const Scenario base = baseline_variant(scenario);
  auto fut = std::async(std::launch::async, [&base] { return run(base); });
  CompareResult r;
  r.proposed = run(scenario);
  r.baseline = fut.get();
  if (r.proposed.aborted) throw RuntimeAbort("proposed run aborted: " + r.proposed.abort_reason);
  if (r.baseline.aborted) throw RuntimeAbort("baseline run aborted: " + r.baseline.abort_reason);

  const double thr = scenario.sim.convergence_threshold;
  r.proposed_tc = detect_convergence(r.proposed, thr);
  r.baseline_tc = detect_convergence(r.baseline, thr);
  r.window_start = (r.proposed_tc && r.baseline_tc)
                       ? std::max(*r.proposed_tc, *r.baseline_tc)
                       : 0.0;
  r.proposed_metrics = compute_metrics(r.proposed, r.window_start);
  r.baseline_metrics = compute_metrics(r.baseline, r.window_start);
  r.proposed_metrics.convergence_time = r.proposed_tc;
  r.baseline_metrics.convergence_time = r.baseline_tc;
  for (int a = 0; a < 3; ++a) {
    r.position_rmse_ratio[a] = ratio(r.proposed_metrics.formation[a].position_rmse,
                                     r.baseline_metrics.formation[a].position_rmse);
    r.speed_rmse_ratio[a] = ratio(r.proposed_metrics.formation[a].speed_rmse,
                                  r.baseline_metrics.formation[a].speed_rmse);
  }
  r.proposed_chatter = xy_chatter(r.proposed);
  r.baseline_chatter = xy_chatter(r.baseline);
  return r;
}

void write_compare_summary(std::ostream& os, const CompareResult& r) {
  os << "metric,proposed,baseline,ratio\n";
  const char* axes[] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a) {
    os << "position_rmse_" << axes[a] << ','
       << format_number(r.proposed_metrics.formation[a].position_rmse) << ','
       << format_number(r.baseline_metrics.formation[a].position_rmse) << ','
       << format_number(r.position_rmse_ratio[a]) << '\n';
  }
  for (int a = 0; a < 3; ++a) {
    os << "speed_rmse_" << axes[a] << ','
       << format_number(r.proposed_metrics.formation[a].speed_rmse) << ','
       << format_number(r.baseline_metrics.formation[a].speed_rmse) << ','
       << format_number(r.speed_rmse_ratio[a]) << '\n';
  }
  os << "chatter_xy," << r.proposed_chatter << ',' << r.baseline_chatter << ','
     << format_number(ratio(static_cast<double>(r.proposed_chatter),
                            static_cast<double>(r.baseline_chatter)))
     << '\n';
  auto tc = [](const std::optional<double>& t) { return t ? format_number(*t) : ""; };
  os << "convergence_time_s," << tc(r.proposed_tc) << ',' << tc(r.baseline_tc) << ",\n";
  os << "window_start_s," << format_number(r.window_start) << ','
     << format_number(r.window_start) << ",\n";
  os << "tracks_better," << (r.proposed_tracks_better() ? 1 : 0) << ",,\n";
  os << "chatters_less," << (r.proposed_chatters_less() ? 1 : 0) << ",,\n";
}

void write_compare_series(std::ostream& os, const CompareResult& r) {
  os << "t,vehicle";
  for (const char* run : {"proposed", "baseline"}) {
    for (const char* q : {"eps_", "eps_dot_"}) {
      for (const char* a : {"x", "y", "z"}) os << ',' << q << a << '_' << run;
    }
  }
  os << '\n';
  const std::size_t n = std::min(r.proposed.records.size(), r.baseline.records.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = r.proposed.records[k];
    const auto& b = r.baseline.records[k];
    for (std::size_t i = 0; i < p.vehicles.size(); ++i) {
      os << format_number(p.t) << ',' << i;
      for (const StepRecord* rec : {&p, &b}) {
        const auto& v = rec->vehicles[i];
        for (int a = 0; a < 3; ++a) os << ',' << format_number(v.eps(a));
        for (int a = 0; a < 3; ++a) os << ',' << format_number(v.eps_dot(a));
      }
      os << '\n';
    }
  }
}

void export_compare(const CompareResult& r, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw RuntimeAbort("cannot create " + out_dir.string() + ": " + ec.message());
  for (const auto& [name, writer] :
       {std::pair{"compare_summary.csv", &write_compare_summary},
        std::pair{"compare_series.csv", &write_compare_series}}) {
    const auto p = out_dir / name;
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    if (!os) throw RuntimeAbort("cannot write " + p.string());
    writer(os, r);
    os.flush();
    if (!os) throw RuntimeAbort("failed writing " + p.string());
  }
  export_results(r.proposed, r.proposed_metrics, out_dir / "proposed");
  export_results(r.baseline, r.baseline_metrics, out_dir / "baseline");
}

}  // namespace auvform
