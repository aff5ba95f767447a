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

#include "hydrotwin/kinematics.hpp"

#include <cmath>
#include <string>

#include "hydrotwin/errors.hpp"

namespace hydrotwin {

namespace {

Eigen::Vector2d heading(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

Eigen::Vector2d heading_derivative(double angle) {
  return {-std::sin(angle), std::cos(angle)};
}

// A point on the chain is identified by its owning link and the arc
// distance from that link's origin. Link 2 (telescopic) points translate
// with x_prism in addition to their fixed offset.
struct ChainPoint {
  int link;       // 0, 1, 2
  double offset;  // m along the link axis
};

Eigen::Vector2d chain_position(const CraneGeometry& geom, const JointState& q,
                               const ChainPoint& p) {
  const double t1 = q.theta1;
  const double t12 = q.theta1 + q.theta2;
  switch (p.link) {
    case 0:
      return p.offset * heading(t1);
    case 1:
      return geom.link_lengths[0] * heading(t1) + p.offset * heading(t12);
    default:
      return geom.link_lengths[0] * heading(t1) +
             (geom.link_lengths[1] + q.x_prism + p.offset) * heading(t12);
  }
}

Jacobian2x3 chain_jacobian(const CraneGeometry& geom, const JointState& q,
                           const ChainPoint& p) {
  const double t1 = q.theta1;
  const double t12 = q.theta1 + q.theta2;
  Jacobian2x3 jac = Jacobian2x3::Zero();
  switch (p.link) {
    case 0:
      jac.col(0) = p.offset * heading_derivative(t1);
      break;
    case 1:
      jac.col(0) = geom.link_lengths[0] * heading_derivative(t1) +
                   p.offset * heading_derivative(t12);
      jac.col(1) = p.offset * heading_derivative(t12);
      break;
    default: {
      const double reach = geom.link_lengths[1] + q.x_prism + p.offset;
      jac.col(0) = geom.link_lengths[0] * heading_derivative(t1) +
                   reach * heading_derivative(t12);
      jac.col(1) = reach * heading_derivative(t12);
      jac.col(2) = heading(t12);
      break;
    }
  }
  return jac;
}

ChainPoint end_effector_point(const CraneGeometry& geom) {
  return {2, geom.link_lengths[2]};
}

// cg_positions order: one entry per weight component, then the load.
ChainPoint cg_point(const CraneGeometry& geom, int index) {
  const int n = static_cast<int>(geom.weight_components.size());
  if (index >= 0 && index < n) {
    const WeightComponent& w = geom.weight_components[index];
    return {w.link, w.cg_offset};
  }
  if (geom.load_mass && index == n) return end_effector_point(geom);
  throw DomainError("unknown CG index " + std::to_string(index));
}

}  // namespace

CranePoints forward_kinematics(const CraneGeometry& geom,
                               const JointState& q) {
  geom.check_limits(q);
  CranePoints out;
  out.end_effector = chain_position(geom, q, end_effector_point(geom));
  const int n = static_cast<int>(geom.weight_components.size());
  const int total = n + (geom.load_mass ? 1 : 0);
  out.cg_positions.reserve(total);
  for (int i = 0; i < total; ++i)
    out.cg_positions.push_back(chain_position(geom, q, cg_point(geom, i)));
  return out;
}

Jacobian2x3 jacobian_point(const CraneGeometry& geom, const JointState& q,
                           const PointSelector& point) {
  geom.check_limits(q);
  if (point.kind == PointSelector::Kind::kEndEffector)
    return chain_jacobian(geom, q, end_effector_point(geom));
  return chain_jacobian(geom, q, cg_point(geom, point.cg_index));
}

double cylinder_length(const CylinderLinkage& linkage, double theta) {
  const double a = linkage.a;
  const double b = linkage.b;
  const double c2 =
      a * a + b * b - 2.0 * a * b * std::cos(theta + linkage.theta0);
  return std::sqrt(std::max(c2, 0.0));
}

double joint_angle_from_length(const CylinderLinkage& linkage, double x_p) {
  const double a = linkage.a;
  const double b = linkage.b;
  if (!(x_p > std::abs(a - b) && x_p < a + b)) {
    throw RangeError("cylinder length " + std::to_string(x_p) +
                     " outside feasible interval (" +
                     std::to_string(std::abs(a - b)) + ", " +
                     std::to_string(a + b) + ")");
  }
  const double cos_arg = (a * a + b * b - x_p * x_p) / (2.0 * a * b);
  return std::acos(std::clamp(cos_arg, -1.0, 1.0)) - linkage.theta0;
}

double linkage_gain(const CylinderLinkage& linkage, double theta) {
  const double c = cylinder_length(linkage, theta);
  return linkage.a * linkage.b * std::sin(theta + linkage.theta0) / c;
}

double cylinder_speed(const CylinderLinkage& linkage, double theta,
                      double dtheta) {
  return linkage_gain(linkage, theta) * dtheta;
}

double actuator_speed(const CraneGeometry& geom, const JointState& q,
                      const JointVelocity& qdot, int actuator) {
  if (actuator == 2) return qdot.dx_prism;
  return cylinder_speed(geom.linkages[actuator], q[actuator], qdot[actuator]);
}

double actuator_gain(const CraneGeometry& geom, const JointState& q,
                     int actuator) {
  if (actuator == 2) return 1.0;  // prismatic coordinate is its own actuator
  return linkage_gain(geom.linkages[actuator], q[actuator]);
}

}  // namespace hydrotwin
