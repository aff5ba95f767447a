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
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace hydrotwin {

inline constexpr double kGravity = 9.81;  // m/s^2
inline constexpr int kNumJoints = 3;      // revolute, revolute, prismatic
inline constexpr int kNumActuators = 3;

/// Crane pose: two revolute joint angles and the prismatic extension.
/// All planar quantities live in the boom plane, base frame at joint 1,
/// y up, angles counter-clockwise.
struct JointState {
  double theta1 = 0.0;   // rad
  double theta2 = 0.0;   // rad
  double x_prism = 0.0;  // m

  double operator[](int i) const;
  double& operator[](int i);
};

/// Rate of change of the crane pose.
struct JointVelocity {
  double dtheta1 = 0.0;   // rad/s
  double dtheta2 = 0.0;   // rad/s
  double dx_prism = 0.0;  // m/s

  double operator[](int i) const;
};

/// One double-acting cylinder (or a set of identical serially connected
/// cylinders treated as one equivalent actuator, count > 1).
struct CylinderGeometry {
  double piston_diameter = 0.0;  // m
  double rod_diameter = 0.0;     // m
  double stroke = 0.0;           // m
  int count = 1;

  /// Piston-side (bore) area, pi/4 * piston^2.
  double area_a() const;
  /// Rod-side (annulus) area, pi/4 * (piston^2 - rod^2).
  double area_b() const;

  /// Throws ConfigError on violated invariants (rod >= piston, stroke <= 0,
  /// count < 1).
  void validate() const;
};

/// Two-pin triangle mount of a cylinder driving a revolute joint: the
/// cylinder closes the triangle between a base mount at distance `a` from
/// the pivot and a rod attachment at distance `b`, with mount phase
/// `theta0` absorbing the fixed offsets, so the cylinder length is
/// sqrt(a^2 + b^2 - 2ab cos(theta + theta0)).
struct CylinderLinkage {
  double a = 0.0;       // m, pivot to cylinder base mount
  double b = 0.0;       // m, pivot to rod attachment
  double theta0 = 0.0;  // rad, mount phase offset
  CylinderGeometry geometry;

  void validate() const;
};

/// Lumped weight: mass with its center of gravity at `cg_offset` along the
/// owning link's axis. `link` is 0-based (0, 1, 2); link 2 is the sliding
/// telescopic section, whose points translate with the prismatic extension.
struct WeightComponent {
  double mass = 0.0;       // kg
  double cg_offset = 0.0;  // m along the owning link
  int link = 0;
};

struct JointLimits {
  double lo = 0.0;
  double hi = 0.0;
};

/// Full mechanical description of the planar 3-joint loader crane
/// (revolute, revolute, prismatic). Links 2 and 3 are collinear: the
/// telescopic section slides along the jib axis.
///
/// Invariants validated by validate():
///  - three links with positive lengths, masses >= 0
///  - joint limits ordered, within linkage-gain-positive range
///  - each revolute linkage has strictly positive gain dC/dtheta over the
///    whole limit range (the condition that makes C invertible)
struct CraneGeometry {
  std::vector<double> link_lengths;  // m, exactly 3
  std::vector<WeightComponent> weight_components;
  std::optional<double> load_mass;  // kg, attached at the end-effector
  std::array<CylinderLinkage, 2> linkages;  // actuators of joints 1 and 2
  CylinderGeometry prism_cylinder;          // equivalent prismatic actuator
  std::array<JointLimits, kNumJoints> joint_limits;

  /// Throws ConfigError if any invariant is violated. Every loading path
  /// (config files, fixtures, bindings) calls this before use.
  void validate() const;

  /// Throws DomainError naming the offending joint if q is out of limits.
  void check_limits(const JointState& q) const;

  /// Clamps q into the configured limits (used on noisy measured poses).
  JointState clamp_to_limits(const JointState& q) const;

  const CylinderGeometry& actuator_cylinder(int actuator) const;
};

/// Planar positions of the end-effector and of every weight component's
/// center of gravity (plus the load's, when present), in the base frame.
struct CranePoints {
  Eigen::Vector2d end_effector;
  std::vector<Eigen::Vector2d> cg_positions;
};

/// Selects the point a Jacobian or kinematic query refers to.
struct PointSelector {
  enum class Kind { kEndEffector, kCg };
  Kind kind = Kind::kEndEffector;
  int cg_index = -1;

  static PointSelector end_effector() { return {Kind::kEndEffector, -1}; }
  static PointSelector cg(int index) { return {Kind::kCg, index}; }
};

const char* joint_name(int joint);

}  // namespace hydrotwin
