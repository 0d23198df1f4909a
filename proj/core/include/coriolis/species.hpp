#ifndef CORIOLIS_SPECIES_HPP
#define CORIOLIS_SPECIES_HPP

#include "coriolis/constants.hpp"

namespace coriolis {

/// Atom interrogated by the interferometer. Recoil quantities are derived
/// from (mass, wavenumber) on every call and never stored separately.
struct AtomSpecies {
  double mass = 0.0;        // [kg]
  double wavenumber = 0.0;  // single-photon optical wavenumber k [rad/m]

  /// v_r = hbar k / m [m/s]
  double recoil_velocity() const { return constants.hbar * wavenumber / mass; }

  /// omega_r = hbar k^2 / (2 m) = k v_r / 2 [rad/s]
  double recoil_rate() const { return wavenumber * recoil_velocity() / 2.0; }
};

/// Cesium-133 on the 852 nm D2 line.
AtomSpecies cesium_species();

}  // namespace coriolis

#endif  // CORIOLIS_SPECIES_HPP
