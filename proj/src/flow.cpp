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

#include "hydrotwin/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "hydrotwin/errors.hpp"

namespace hydrotwin {

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::kExtend: return "extend";
    case Direction::kHold: return "hold";
    case Direction::kRetract: return "retract";
  }
  return "?";
}

Direction direction_from_name(const std::string& name) {
  if (name == "extend") return Direction::kExtend;
  if (name == "hold") return Direction::kHold;
  if (name == "retract") return Direction::kRetract;
  throw SchemaError("unknown direction label: " + name);
}

void FilterSpec::validate() const {
  if (window < 5 || window % 2 == 0)
    throw ConfigError("filter window must be odd and >= 5");
  if (poly_order < 2 || poly_order >= window)
    throw ConfigError("filter poly order must be >= 2 and < window");
  if (!(dt > 0.0)) throw ConfigError("filter dt must be > 0");
}

Direction classify_direction(double xdot_p, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("deadband epsilon must be > 0");
  if (xdot_p > epsilon) return Direction::kExtend;
  if (xdot_p < -epsilon) return Direction::kRetract;
  return Direction::kHold;
}

double meter_in_flow_value(const CylinderGeometry& cyl, double xdot_p,
                           double epsilon) {
  return meter_in_flow(cyl, xdot_p, epsilon).q;
}

FlowSample meter_in_flow(const CylinderGeometry& cyl, double xdot_p,
                         double epsilon) {
  const Direction dir = classify_direction(xdot_p, epsilon);
  switch (dir) {
    case Direction::kExtend:
      return {cyl.count * cyl.area_a() * xdot_p, dir};
    case Direction::kRetract:
      return {cyl.count * cyl.area_b() * xdot_p, dir};
    case Direction::kHold:
    default:
      return {0.0, Direction::kHold};
  }
}

double rate_from_flow(const CylinderGeometry& cyl, double q) {
  if (q > 0.0) return q / (cyl.count * cyl.area_a());
  if (q < 0.0) return q / (cyl.count * cyl.area_b());
  return 0.0;
}

std::vector<double> sg_derivative(std::span<const double> series,
                                  const FilterSpec& spec) {
  spec.validate();
  const int n = static_cast<int>(series.size());
  const int w = spec.window;
  if (n < w)
    throw RangeError("series length " + std::to_string(n) +
                     " shorter than filter window " + std::to_string(w));

  // Precompute one derivative weight row per in-window evaluation offset:
  // row(o) * y_window = d/dk of the least-squares polynomial, evaluated at
  // sample offset o, in index units. Positions are integers, so the
  // Vandermonde solve is well conditioned for the supported window sizes.
  const int p = spec.poly_order;
  std::vector<Eigen::RowVectorXd> weights(w);
  for (int o = 0; o < w; ++o) {
    Eigen::MatrixXd vand(w, p + 1);
    for (int j = 0; j < w; ++j) {
      const double x = static_cast<double>(j - o);
      double pw = 1.0;
      for (int k = 0; k <= p; ++k) {
        vand(j, k) = pw;
        pw *= x;
      }
    }
    // derivative at x=0 is the linear coefficient of the LS fit
    Eigen::MatrixXd pinv =
        (vand.transpose() * vand).ldlt().solve(vand.transpose());
    weights[o] = pinv.row(1);
  }

  std::vector<double> out(n);
  const int half = w / 2;
  for (int i = 0; i < n; ++i) {
    const int lo = std::clamp(i - half, 0, n - w);
    const int o = i - lo;
    double acc = 0.0;
    for (int j = 0; j < w; ++j) acc += weights[o][j] * series[lo + j];
    out[i] = acc / spec.dt;
  }
  return out;
}

}  // namespace hydrotwin
