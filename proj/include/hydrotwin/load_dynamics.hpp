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

#include <vector>

#include <Eigen/Core>

#include "hydrotwin/geometry.hpp"

namespace hydrotwin {

/// Generalized torques/forces on the joint coordinates caused by the weight
/// loads, via virtual work (tau = sum_k J_k^T gamma_k). f_prism is the
/// force on the prismatic coordinate, in N.
struct JointTorques {
  double tau1 = 0.0;     // N*m
  double tau2 = 0.0;     // N*m
  double f_prism = 0.0;  // N

  double operator[](int i) const {
    return i == 0 ? tau1 : (i == 1 ? tau2 : f_prism);
  }
};

/// Planar gravity force vectors (0, -m*g), one per weight component and one
/// for the load when present, aligned with CranePoints::cg_positions.
std::vector<Eigen::Vector2d> weight_forces(const CraneGeometry& geom);

/// Static joint torques from all weight loads at pose q. Equals the
/// negative gradient of total gravitational potential energy.
JointTorques joint_torques(const CraneGeometry& geom, const JointState& q);

/// Static reaction force on a revolute actuator's cylinder:
/// F = tau / (dC/dtheta). The sign follows tau: positive values mean the
/// weight loads push the piston toward extension; the common lifting case
/// yields negative values (loads compress the cylinder).
/// Throws SingularityError if the gain magnitude is below 1e-9 m/rad.
double static_reaction_force(const CylinderLinkage& linkage, double theta,
                             double tau);

/// Total piston force from measured side pressures: p_a*A_A - p_b*A_B.
/// Throws DomainError on negative pressures.
double total_force(const CylinderGeometry& cyl, double p_a, double p_b);

/// Static reaction force of actuator 0/1/2 at pose q (the pipeline feature:
/// joint_torques composed with the gain co-mapping; the prismatic actuator
/// is direct drive).
double actuator_static_force(const CraneGeometry& geom, const JointState& q,
                             int actuator);

}  // namespace hydrotwin
