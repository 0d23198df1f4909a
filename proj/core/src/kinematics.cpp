#include "coriolis/kinematics.hpp"

#include <cmath>

namespace coriolis {

MirrorAxes mirror_axes(double axis_angle) {
  // North is -y in the (x west, y south, z up) lab frame.
  MirrorAxes axes;
  axes.axis_yp = Eigen::Vector3d(0.0, -1.0, 0.0);
  axes.axis_xp =
      Eigen::Vector3d(std::sin(axis_angle), -std::cos(axis_angle), 0.0);
  return axes;
}

double compensated_rate(const SequenceGeometry& g, double earth_rate) {
  const double applied = g.comp_rate_yp + g.comp_rate_xp * std::cos(g.axis_angle);
  return earth_rate * std::cos(g.latitude) - applied;
}

double residual_west_rate(const SequenceGeometry& g) {
  return -g.comp_rate_xp * std::sin(g.axis_angle);
}

RelativeVelocitySet relative_velocities(const AtomSpecies& species,
                                        const SequenceGeometry& g,
                                        double earth_rate) {
  const double two_n_vr = 2.0 * g.bragg_order * species.recoil_velocity();
  const double omega_n = compensated_rate(g, earth_rate);
  const double omega_w = residual_west_rate(g);
  const double T = g.pulse_separation;
  const double Tp = g.mid_separation;

  RelativeVelocitySet v;
  v.v12 = two_n_vr * Eigen::Vector3d(0.0, 0.0, 1.0);
  v.v23 = two_n_vr * Eigen::Vector3d(omega_n * T, omega_w * T, 0.0);
  v.v34 = two_n_vr *
          Eigen::Vector3d(omega_n * (2.0 * T + Tp), omega_w * (2.0 * T + Tp), -1.0);
  v.v4inf = Eigen::Vector3d::Zero();
  return v;
}

ClosureVector closure_error(const AtomSpecies& species,
                            const SequenceGeometry& g, double earth_rate) {
  const double n_vr = g.bragg_order * species.recoil_velocity();
  const double area = g.pulse_separation * (g.pulse_separation + g.mid_separation);
  ClosureVector delta;
  delta.x() = 4.0 * n_vr * compensated_rate(g, earth_rate) * area;
  delta.y() = 4.0 * n_vr * residual_west_rate(g) * area;
  delta.z() = 2.0 * n_vr * g.final_pulse_delay;
  return delta;
}

double combine_axis_rates(double r1, double r2, double axis_angle) {
  return std::sqrt(r1 * r1 + r2 * r2 +
                   2.0 * r1 * r2 * std::cos(axis_angle));
}

}  // namespace coriolis
