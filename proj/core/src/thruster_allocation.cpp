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

#include "auvform/thruster_allocation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace auvform {
namespace {

void check_range(const char* name, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << "thruster coefficient " << name << " = " << v << " outside [" << lo
       << ", " << hi << "]";
    throw ConfigError(os.str());
  }
}

Eigen::Matrix<double, 3, 5> pseudo_inverse(const ThrusterMatrix& b) {
  return b.completeOrthogonalDecomposition().pseudoInverse();
}

}  // namespace

void ThrusterConfig::validate() const {
  check_range("K1", k1, 0.2, 1.0);
  check_range("K2", k2, 0.2, 1.0);
  check_range("K3", k3, -1.0, 1.0);
  check_range("L1", l1, 0.3, 1.0);
  check_range("L2", l2, 0.3, 1.0);
  check_range("t1", t1, 0.0, 1.0);
  check_range("t2", t2, 0.0, 1.0);
  check_range("t3", t3, -0.5, 0.5);
  check_range("t4", t4, -0.5, 0.5);
  for (double r : {r1, r2, r3}) {
    if (!std::isfinite(r)) throw ConfigError("thruster moment arms must be finite");
  }
  if (!(u_limit > 0.0)) throw ConfigError("thruster u_limit must be > 0");
}

Wrench5 Wrench5::from_body6(const Vector6& w) {
  Wrench5 out;
  out.values << w(kX), w(kY), w(kYaw), w(kZ), w(kPitch);
  return out;
}

Vector6 Wrench5::to_body6() const {
  Vector6 w;
  w << tau_u(), tau_v(), tau_w(), 0.0, tau_q(), tau_r();
  return w;
}

ThrusterMatrix build_tcm(const ThrusterConfig& c) {
  c.validate();
  ThrusterMatrix b;
  b << c.k1 * c.l1, c.k2 * c.l2, 0.0,
       -c.t1 * (1.0 - c.k1) * c.l1, c.t2 * (1.0 - c.k2) * c.l2, 0.0,
       c.k1 * c.l1 * c.r1, -c.k2 * c.l2 * c.r2, 0.0,
       0.0, 0.0, c.k3,
       c.t3 * c.k1 * (1.0 - c.l1) * c.r3, c.t4 * c.k2 * (1.0 - c.l2) * c.r3, 0.0;
  return b;
}

Wrench5 wrench_from_thrust(const Vector3& u_t, const ThrusterConfig& cfg) {
  if ((u_t.array().abs() > cfg.u_limit * (1.0 + 1e-12)).any()) {
    throw ConfigError("thruster force exceeds u_limit");
  }
  Wrench5 w;
  w.values = build_tcm(cfg) * u_t;
  return w;
}

ThrusterAllocator::ThrusterAllocator(const ThrusterConfig& cfg)
    : cfg_(cfg), tcm_(build_tcm(cfg)), pinv_(pseudo_inverse(tcm_)) {}

AllocationResult ThrusterAllocator::allocate(const Wrench5& tau) const {
  AllocationResult out;
  const double lim = cfg_.u_limit;
  Vector3 u = pinv_ * tau.values;

  std::array<bool, 3> sat{};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(u(i)) > lim) {
      u(i) = std::copysign(lim, u(i));
      sat[i] = true;
      out.saturated = true;
    }
  }

  if (out.saturated) {
    // Re-project the remaining demand onto the thrusters that are still free.
    Eigen::Matrix<double, 5, Eigen::Dynamic> free_cols(5, 0);
    std::array<int, 3> free_idx{};
    int n_free = 0;
    Vector5 remaining = tau.values;
    for (int i = 0; i < 3; ++i) {
      if (sat[i]) {
        remaining -= tcm_.col(i) * u(i);
      } else {
        free_idx[n_free++] = i;
      }
    }
    if (n_free > 0) {
      free_cols.resize(5, n_free);
      for (int j = 0; j < n_free; ++j) free_cols.col(j) = tcm_.col(free_idx[j]);
      const Eigen::VectorXd sol =
          free_cols.completeOrthogonalDecomposition().solve(remaining);
      for (int j = 0; j < n_free; ++j) {
        u(free_idx[j]) = std::clamp(sol(j), -lim, lim);
      }
    }
  }

  out.thrust = u;
  out.residual = tau.values - tcm_ * u;
  return out;
}

AllocationResult allocate(const Wrench5& tau, const ThrusterConfig& cfg) {
  return ThrusterAllocator(cfg).allocate(tau);
}

}  // namespace auvform
