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

#include "auvform/mpc_shell.hpp"

#include <random>
#include <string>

namespace auvform {
namespace {

struct Evaluation {
  double cost = 0.0;
  bool feasible = true;
};

// Candidate a beats b: feasibility first, then strictly lower cost.
bool better(const Evaluation& a, const Evaluation& b) {
  if (a.feasible != b.feasible) return a.feasible;
  return a.cost < b.cost;
}

}  // namespace

void MpcConfig::validate() const {
  if (n_e < 1 || n_u < 1) throw ConfigError("mpc horizons n_e and n_u must be >= 1");
  if ((tau_lower.array() > tau_upper.array()).any()) {
    throw ConfigError("mpc control bounds must satisfy lower <= upper");
  }
  if ((state_lower.array() > state_upper.array()).any()) {
    throw ConfigError("mpc state bounds must satisfy lower <= upper");
  }
  if (candidate_count < 0 || rounds < 0) {
    throw ConfigError("mpc candidate_count and rounds must be >= 0");
  }
  if (!(perturbation >= 0.0)) throw ConfigError("mpc perturbation must be >= 0");
  if (stride < 1) throw ConfigError("mpc stride must be >= 1");
}

Prediction predict_rollout(const VehicleState& state,
                           const ControlSequence& controls,
                           const DisturbanceFn& disturbance,
                           const VehicleDynamics& model, int n_e, double t0,
                           double dt) {
  if (static_cast<int>(controls.size()) < n_e) {
    throw ConfigError("rollout needs at least n_e controls");
  }
  Prediction p;
  p.states.reserve(n_e);
  p.rates.reserve(n_e);
  VehicleState s = state;
  for (int k = 0; k < n_e; ++k) {
    s = model.step(s, Wrench6::body(controls[k]), disturbance, t0 + k * dt, dt);
    p.states.push_back(s);
    p.rates.push_back(pose_rate(s));
  }
  return p;
}

double mpc_cost(const std::vector<Vector6>& predicted,
                const std::vector<Vector6>& desired,
                const ControlSequence& controls, const MpcConfig& cfg) {
  const auto ne = static_cast<std::size_t>(cfg.n_e);
  const auto len = static_cast<std::size_t>(cfg.sequence_length());
  if (predicted.size() != ne || desired.size() != ne || controls.size() != len) {
    throw ConfigError("mpc_cost: expected " + std::to_string(ne) +
                      " predictions/targets and " + std::to_string(len) +
                      " controls, got " + std::to_string(predicted.size()) + "/" +
                      std::to_string(desired.size()) + "/" +
                      std::to_string(controls.size()));
  }
  double j = 0.0;
  for (std::size_t k = 0; k < ne; ++k) j += (predicted[k] - desired[k]).squaredNorm();
  if (cfg.smoothing == SmoothingMode::kPairwise) {
    for (std::size_t k = 0; k < ne; ++k) {
      for (int i = 1; i <= cfg.n_u; ++i) {
        j += (controls[k] - controls[k + i]).squaredNorm();
      }
    }
  } else {
    for (std::size_t k = 1; k < len; ++k) {
      j += (controls[k] - controls[k - 1]).squaredNorm();
    }
  }
  return j;
}

ControlSequence clip_sequence(const ControlSequence& seq, const MpcConfig& cfg) {
  ControlSequence out = seq;
  for (auto& u : out) u = u.cwiseMax(cfg.tau_lower).cwiseMin(cfg.tau_upper);
  return out;
}

MpcSolution mpc_optimize(const VehicleState& state, const MpcTarget& target,
                         const ControlSequence& smc_nominal,
                         const VehicleDynamics& model,
                         const DisturbanceFn& disturbance,
                         const MpcConfig& cfg, double t0, double dt,
                         std::uint64_t solve_index) {
  const int len = cfg.sequence_length();
  if (static_cast<int>(smc_nominal.size()) != len) {
    throw ConfigError("mpc nominal sequence must have n_e + n_u elements");
  }
  if (static_cast<int>(target.pose.size()) != cfg.n_e ||
      static_cast<int>(target.rate.size()) != cfg.n_e) {
    throw ConfigError("mpc target must have n_e entries");
  }

  auto evaluate = [&](const ControlSequence& seq) {
    const Prediction p =
        predict_rollout(state, seq, disturbance, model, cfg.n_e, t0, dt);
    Evaluation e;
    e.cost = mpc_cost(p.rates, target.rate, seq, cfg);
    for (int k = 0; k < cfg.n_e && e.feasible; ++k) {
      Vector6 err = p.states[k].pose() - target.pose[k];
      for (int a = kRoll; a <= kYaw; ++a) err(a) = wrap_angle(err(a));
      e.feasible = (err.array() >= cfg.state_lower.array()).all() &&
                   (err.array() <= cfg.state_upper.array()).all();
    }
    return e;
  };

  ControlSequence best = clip_sequence(smc_nominal, cfg);
  Evaluation best_eval = evaluate(best);
  const Evaluation nominal_eval = best_eval;

  std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (solve_index + 1)));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, len - 1);

  double radius = cfg.perturbation;
  for (int round = 0; round < cfg.rounds; ++round, radius *= 0.5) {
    // Generate the whole round before evaluating so the result does not
    // depend on evaluation order.
    std::vector<ControlSequence> candidates;
    if (round == 0) {
      for (int j = 0; j < len; ++j) {
        ControlSequence c = best;
        if (j == 0) {
          c[0] = c[1];
        } else if (j == len - 1) {
          c[j] = c[j - 1];
        } else {
          c[j] = 0.5 * (c[j - 1] + c[j + 1]);
        }
        candidates.push_back(std::move(c));
      }
    }
    for (int n = 0; n < cfg.candidate_count; ++n) {
      Vector6 delta;
      for (int a = 0; a < 6; ++a) delta(a) = radius * unit(rng);
      ControlSequence c = best;
      switch (n % 3) {
        case 0:
          for (auto& u : c) u += delta;
          break;
        case 1:
          c[pick(rng)] += delta;
          break;
        default:
          for (int k = 0; k < len; ++k) c[k] += delta * (double(k + 1) / len);
          break;
      }
      candidates.push_back(clip_sequence(c, cfg));
    }

    int winner = -1;
    Evaluation winner_eval = best_eval;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Evaluation e = evaluate(candidates[i]);
      // Never exceed the nominal's cost, even to gain feasibility.
      if (e.cost > nominal_eval.cost) continue;
      if (better(e, winner_eval)) {
        winner = static_cast<int>(i);
        winner_eval = e;
      }
    }
    if (winner >= 0) {
      best = std::move(candidates[winner]);
      best_eval = winner_eval;
    }
  }

  return {best, best_eval.cost, best_eval.feasible};
}

}  // namespace auvform
