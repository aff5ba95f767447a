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

#include <span>
#include <string>
#include <vector>

#include "hydrotwin/geometry.hpp"

namespace hydrotwin {

/// Default velocity deadband separating motion from hold, in m/s.
/// Sensor-derived speeds never hit exact zero; the "no motion" branch
/// needs a practical width.
inline constexpr double kDefaultVelocityDeadband = 1e-3;

enum class Direction { kExtend, kHold, kRetract };

const char* direction_name(Direction d);
Direction direction_from_name(const std::string& name);

/// Signed meter-in flow. Positive during extension (piston-side feed),
/// negative during retraction (rod-side feed), exactly zero at hold.
struct FlowSample {
  double q = 0.0;  // m^3/s
  Direction direction = Direction::kHold;
};

/// Savitzky-Golay differentiation filter parameters.
struct FilterSpec {
  int window = 11;     // odd sample count >= 5
  int poly_order = 3;  // >= 2 and < window
  double dt = 0.02;    // s

  void validate() const;  // throws ConfigError
};

/// extend if xdot > epsilon, retract if xdot < -epsilon, hold otherwise
/// (boundaries inclusive into hold). Throws DomainError unless epsilon > 0.
Direction classify_direction(double xdot_p, double epsilon);

/// Ideal volumetric continuity on the meter-in side:
///   extension:  q = count * A_A * xdot
///   retraction: q = count * A_B * xdot   (negative)
///   hold:       q = 0
double meter_in_flow_value(const CylinderGeometry& cyl, double xdot_p,
                           double epsilon = kDefaultVelocityDeadband);
FlowSample meter_in_flow(const CylinderGeometry& cyl, double xdot_p,
                         double epsilon = kDefaultVelocityDeadband);

/// Exact inverse of meter_in_flow outside the deadband.
double rate_from_flow(const CylinderGeometry& cyl, double q);

/// Per-sample least-squares local-polynomial derivative of a uniformly
/// sampled series. Boundary samples reuse the nearest full window with a
/// one-sided fit of the same order, so polynomials up to poly_order are
/// differentiated exactly everywhere. Throws RangeError when the series is
/// shorter than the window.
std::vector<double> sg_derivative(std::span<const double> series,
                                  const FilterSpec& spec);

}  // namespace hydrotwin
