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

#include "hydrotwin/load_dynamics.hpp"

#include <cmath>
#include <string>

#include "hydrotwin/errors.hpp"
#include "hydrotwin/kinematics.hpp"

namespace hydrotwin {

std::vector<Eigen::Vector2d> weight_forces(const CraneGeometry& geom) {
  std::vector<Eigen::Vector2d> forces;
  forces.reserve(geom.weight_components.size() + (geom.load_mass ? 1 : 0));
  for (const auto& w : geom.weight_components)
    forces.emplace_back(0.0, -w.mass * kGravity);
  if (geom.load_mass) forces.emplace_back(0.0, -*geom.load_mass * kGravity);
  return forces;
}

JointTorques joint_torques(const CraneGeometry& geom, const JointState& q) {
  const auto forces = weight_forces(geom);
  Eigen::Vector3d tau = Eigen::Vector3d::Zero();
  for (int i = 0; i < static_cast<int>(forces.size()); ++i) {
    const Jacobian2x3 jac = jacobian_point(geom, q, PointSelector::cg(i));
    tau += jac.transpose() * forces[i];
  }
  return {tau[0], tau[1], tau[2]};
}

double static_reaction_force(const CylinderLinkage& linkage, double theta,
                             double tau) {
  const double gain = linkage_gain(linkage, theta);
  if (std::abs(gain) < 1e-9) {
    throw SingularityError("linkage gain " + std::to_string(gain) +
                           " m/rad below singularity threshold");
  }
  return tau / gain;
}

double total_force(const CylinderGeometry& cyl, double p_a, double p_b) {
  if (p_a < 0.0 || p_b < 0.0)
    throw DomainError("side pressures must be >= 0");
  return p_a * cyl.area_a() - p_b * cyl.area_b();
}

double actuator_static_force(const CraneGeometry& geom, const JointState& q,
                             int actuator) {
  const JointTorques tau = joint_torques(geom, q);
  if (actuator == 2) return tau.f_prism;  // direct drive, gain 1 m/m
  return static_reaction_force(geom.linkages[actuator], q[actuator],
                               tau[actuator]);
}

}  // namespace hydrotwin
