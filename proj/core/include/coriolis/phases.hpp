#ifndef CORIOLIS_PHASES_HPP
#define CORIOLIS_PHASES_HPP

#include <Eigen/Core>

#include "coriolis/constants.hpp"
#include "coriolis/geometry.hpp"
#include "coriolis/species.hpp"

namespace coriolis {

/// Phase budget of the conjugate interferometer pair [rad].
struct PhaseBudget {
  double recoil_phase = 0.0;   // 8 n^2 omega_r T
  double gravity_phase = 0.0;  // n k g T (T + T')
  double total_upper = 0.0;    // recoil + gravity
  double total_lower = 0.0;    // recoil - gravity
  double differential = 0.0;   // 16 n^2 omega_r T (recoil difference of the
                               // pair; gravity is common mode and cancels)
};

PhaseBudget conjugate_phases(const AtomSpecies& species,
                             const SequenceGeometry& g,
                             double gravity = constants.standard_gravity);

/// Space-time-area figure of merit 2 n k g T (T + T') [rad].
double gravitational_area_phase(const AtomSpecies& species,
                                const SequenceGeometry& g,
                                double gravity = constants.standard_gravity);

/// Which wavevector enters the Mach-Zehnder rotation phase.
enum class WavevectorConvention {
  kSinglePhoton,  // |k_vec| = k
  kEffective,     // |k_vec| = 2k (first-order Bragg/Raman gravimeter)
};

/// Earth's rotation vector in the lab frame (x west, y south, z up):
/// Omega * (0, -cos(latitude), sin(latitude)).
Eigen::Vector3d earth_rotation_vector(
    double latitude, double earth_rate = constants.earth_rotation_rate);

/// Rotation phase of a Mach-Zehnder sequence with vertical beams:
/// 2 Omega_vec . (v0 x k_vec) T^2.
double mach_zehnder_rotation_phase(
    const AtomSpecies& species, const Eigen::Vector3d& v0, double T,
    double latitude,
    WavevectorConvention convention = WavevectorConvention::kEffective,
    double earth_rate = constants.earth_rotation_rate);

/// Gravity bias of a rotation-uncompensated vertical gravimeter:
/// 2 Omega_vec . (v0 x z_hat) [m/s^2].
double delta_g(const Eigen::Vector3d& v0, double latitude,
               double earth_rate = constants.earth_rotation_rate);

}  // namespace coriolis

#endif  // CORIOLIS_PHASES_HPP
