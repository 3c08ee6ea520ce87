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

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace auvform {

using Vector3 = Eigen::Vector3d;
using Vector5 = Eigen::Matrix<double, 5, 1>;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix3 = Eigen::Matrix3d;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// Axis order shared by pose, rate and wrench 6-vectors:
/// x y z (surge sway heave) then roll pitch yaw.
enum Axis : int { kX = 0, kY = 1, kZ = 2, kRoll = 3, kPitch = 4, kYaw = 5 };

/// Raised when |pitch| gets too close to pi/2 for the Euler-rate transform.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or scenario content. The message names the violated
/// invariant.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A wrench or vector handed to an operation expecting another frame.
class FrameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-finite state or other failure while a simulation is running.
class RuntimeAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sign with sign(0) = 0.
inline double sgn(double v) { return (v > 0.0) - (v < 0.0); }

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

}  // namespace auvform
