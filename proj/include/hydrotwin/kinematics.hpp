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

#include <Eigen/Core>

#include "hydrotwin/geometry.hpp"

namespace hydrotwin {

using Jacobian2x3 = Eigen::Matrix<double, 2, 3>;

/// Planar positions of the end-effector and all centers of gravity for
/// pose q. Throws DomainError (naming the joint) when q is out of limits.
CranePoints forward_kinematics(const CraneGeometry& geom, const JointState& q);

/// 2x3 Jacobian of the selected point w.r.t. (theta1, theta2, x_prism):
/// point velocity = J * qdot. The third column is the unit vector along
/// the prismatic axis for points that translate with the extension, and
/// zero for proximal points. Throws DomainError for out-of-limit q or an
/// unknown selector.
Jacobian2x3 jacobian_point(const CraneGeometry& geom, const JointState& q,
                           const PointSelector& point);

/// Cylinder length C(theta) = sqrt(a^2 + b^2 - 2ab cos(theta + theta0)).
/// Result lies in [|a-b|, a+b].
double cylinder_length(const CylinderLinkage& linkage, double theta);

/// Inverse of cylinder_length: the unique joint angle with
/// C(theta) = x_p, valid wherever the linkage gain is positive.
/// Throws RangeError if x_p is not strictly inside (|a-b|, a+b).
double joint_angle_from_length(const CylinderLinkage& linkage, double x_p);

/// dC/dtheta = a*b*sin(theta + theta0) / C(theta), in m/rad. Strictly
/// positive over the joint limit range of a validated geometry.
double linkage_gain(const CylinderLinkage& linkage, double theta);

/// Piston speed for a revolute actuator: dC/dtheta * thetadot.
double cylinder_speed(const CylinderLinkage& linkage, double theta,
                      double dtheta);

/// Piston speed of actuator 0/1/2 at pose q moving at qdot. The prismatic
/// actuator is direct drive (gain 1 m/m).
double actuator_speed(const CraneGeometry& geom, const JointState& q,
                      const JointVelocity& qdot, int actuator);

/// Linkage gain of actuator 0/1 at pose q; identically 1 for actuator 2.
double actuator_gain(const CraneGeometry& geom, const JointState& q,
                     int actuator);

}  // namespace hydrotwin
