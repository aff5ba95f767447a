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

#include "hydrotwin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hydrotwin/errors.hpp"

namespace hydrotwin {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

const char* joint_name(int joint) {
  switch (joint) {
    case 0: return "theta1";
    case 1: return "theta2";
    case 2: return "x_prism";
    default: return "?";
  }
}

double JointState::operator[](int i) const {
  switch (i) {
    case 0: return theta1;
    case 1: return theta2;
    default: return x_prism;
  }
}

double& JointState::operator[](int i) {
  switch (i) {
    case 0: return theta1;
    case 1: return theta2;
    default: return x_prism;
  }
}

double JointVelocity::operator[](int i) const {
  switch (i) {
    case 0: return dtheta1;
    case 1: return dtheta2;
    default: return dx_prism;
  }
}

double CylinderGeometry::area_a() const {
  return std::numbers::pi / 4.0 * piston_diameter * piston_diameter;
}

double CylinderGeometry::area_b() const {
  return std::numbers::pi / 4.0 *
         (piston_diameter * piston_diameter - rod_diameter * rod_diameter);
}

void CylinderGeometry::validate() const {
  require(piston_diameter > 0.0, "cylinder: piston diameter must be > 0");
  require(rod_diameter > 0.0, "cylinder: rod diameter must be > 0");
  require(rod_diameter < piston_diameter,
          "cylinder: rod diameter must be smaller than piston diameter");
  require(stroke > 0.0, "cylinder: stroke must be > 0");
  require(count >= 1, "cylinder: count must be >= 1");
}

void CylinderLinkage::validate() const {
  require(a > 0.0, "linkage: mount distance a must be > 0");
  require(b > 0.0, "linkage: mount distance b must be > 0");
  require(std::isfinite(theta0), "linkage: theta0 must be finite");
  geometry.validate();
}

void CraneGeometry::validate() const {
  require(link_lengths.size() == 3, "geometry: exactly 3 link lengths required");
  for (double l : link_lengths)
    require(l > 0.0 && std::isfinite(l), "geometry: link lengths must be > 0");
  for (const auto& w : weight_components) {
    require(w.mass >= 0.0 && std::isfinite(w.mass),
            "geometry: weight masses must be >= 0");
    require(w.cg_offset >= 0.0, "geometry: cg offsets must be >= 0");
    require(w.link >= 0 && w.link < 3,
            "geometry: weight component link index must be 0, 1 or 2");
  }
  if (load_mass) require(*load_mass >= 0.0, "geometry: load mass must be >= 0");
  for (int j = 0; j < kNumJoints; ++j) {
    require(joint_limits[j].lo < joint_limits[j].hi,
            std::string("geometry: joint limits must satisfy lo < hi for ") +
                joint_name(j));
  }
  require(joint_limits[2].lo >= 0.0,
          "geometry: prismatic extension limits must be >= 0");
  prism_cylinder.validate();
  require(prism_cylinder.count * prism_cylinder.stroke >=
              joint_limits[2].hi - joint_limits[2].lo,
          "geometry: prismatic stroke too short for the extension range");

  // The linkage gain a*b*sin(theta+theta0)/C is strictly positive exactly
  // when theta+theta0 stays inside (0, pi) over the joint's limit range.
  for (int j = 0; j < 2; ++j) {
    const CylinderLinkage& lk = linkages[j];
    lk.validate();
    const double lo = joint_limits[j].lo + lk.theta0;
    const double hi = joint_limits[j].hi + lk.theta0;
    if (!(lo > 0.0 && hi < std::numbers::pi)) {
      throw ConfigError(
          std::string("geometry: linkage gain for ") + joint_name(j) +
          " is not strictly positive over the joint limit range"
          " (theta + theta0 must stay inside (0, pi))");
    }
  }
}

void CraneGeometry::check_limits(const JointState& q) const {
  for (int j = 0; j < kNumJoints; ++j) {
    const double v = q[j];
    if (!(v >= joint_limits[j].lo && v <= joint_limits[j].hi)) {
      throw DomainError(std::string("joint ") + joint_name(j) +
                        " out of limits: " + std::to_string(v) + " not in [" +
                        std::to_string(joint_limits[j].lo) + ", " +
                        std::to_string(joint_limits[j].hi) + "]");
    }
  }
}

JointState CraneGeometry::clamp_to_limits(const JointState& q) const {
  JointState out = q;
  for (int j = 0; j < kNumJoints; ++j)
    out[j] = std::clamp(q[j], joint_limits[j].lo, joint_limits[j].hi);
  return out;
}

const CylinderGeometry& CraneGeometry::actuator_cylinder(int actuator) const {
  if (actuator == 0 || actuator == 1) return linkages[actuator].geometry;
  return prism_cylinder;
}

}  // namespace hydrotwin
