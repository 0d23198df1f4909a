#include "coriolis/phases.hpp"

#include <cmath>

#include <Eigen/Geometry>

namespace coriolis {

PhaseBudget conjugate_phases(const AtomSpecies& species,
                             const SequenceGeometry& g, double gravity) {
  const double n = static_cast<double>(g.bragg_order);
  const double T = g.pulse_separation;
  const double area = T * (T + g.mid_separation);

  PhaseBudget b;
  b.recoil_phase = 8.0 * n * n * species.recoil_rate() * T;
  b.gravity_phase = n * species.wavenumber * gravity * area;
  b.total_upper = b.recoil_phase + b.gravity_phase;
  b.total_lower = b.recoil_phase - b.gravity_phase;
  // In the pair comparison the gravity term is common mode and drops out;
  // the ellipse shape is set by the recoil difference 16 n^2 omega_r T.
  b.differential = 2.0 * b.recoil_phase;
  return b;
}

double gravitational_area_phase(const AtomSpecies& species,
                                const SequenceGeometry& g, double gravity) {
  const double n = static_cast<double>(g.bragg_order);
  return 2.0 * n * species.wavenumber * gravity * g.pulse_separation *
         (g.pulse_separation + g.mid_separation);
}

Eigen::Vector3d earth_rotation_vector(double latitude, double earth_rate) {
  return earth_rate *
         Eigen::Vector3d(0.0, -std::cos(latitude), std::sin(latitude));
}

double mach_zehnder_rotation_phase(const AtomSpecies& species,
                                   const Eigen::Vector3d& v0, double T,
                                   double latitude,
                                   WavevectorConvention convention,
                                   double earth_rate) {
  const double k_eff = convention == WavevectorConvention::kEffective
                           ? 2.0 * species.wavenumber
                           : species.wavenumber;
  const Eigen::Vector3d k_vec(0.0, 0.0, k_eff);
  const Eigen::Vector3d omega = earth_rotation_vector(latitude, earth_rate);
  return 2.0 * omega.dot(v0.cross(k_vec)) * T * T;
}

double delta_g(const Eigen::Vector3d& v0, double latitude, double earth_rate) {
  const Eigen::Vector3d z_hat(0.0, 0.0, 1.0);
  const Eigen::Vector3d omega = earth_rotation_vector(latitude, earth_rate);
  return 2.0 * omega.dot(v0.cross(z_hat));
}

}  // namespace coriolis
