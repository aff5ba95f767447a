// Copyright 2026 The Hydrotwin Authors
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
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hydrotwin/geometry.hpp"

namespace hydrotwin {

/// Time-indexed record of joint states, per-side cylinder pressures and
/// pump pressure — what the machine's sensors (or the synthetic plant)
/// provide. Unknown CSV columns (e.g. valve commands u_cmd_i_ma) are
/// carried through as metadata and never used as model inputs.
struct SignalLog {
  double dt = 0.0;  // s, uniform sample period
  std::vector<double> time;
  std::vector<double> theta1;   // rad
  std::vector<double> theta2;   // rad
  std::vector<double> x_prism;  // m
  std::array<std::vector<double>, kNumActuators> p_a;  // Pa
  std::array<std::vector<double>, kNumActuators> p_b;  // Pa
  std::vector<double> p_pump;  // Pa
  std::vector<std::pair<std::string, std::vector<double>>> extra_columns;

  std::size_t size() const { return time.size(); }
  JointState joint_state(std::size_t i) const {
    return {theta1[i], theta2[i], x_prism[i]};
  }

  /// Checks column lengths, nonnegative pressures and uniform, strictly
  /// increasing time (tolerance 1e-6 * dt). Throws SchemaError/TimingError.
  void validate() const;
};

}  // namespace hydrotwin
