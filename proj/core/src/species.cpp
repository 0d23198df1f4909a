#include "coriolis/species.hpp"

#include <numbers>

namespace coriolis {

AtomSpecies cesium_species() {
  AtomSpecies cs;
  cs.mass = 2.2069e-25;  // [kg]
  cs.wavenumber = 2.0 * std::numbers::pi / 852.347e-9;  // D2 line [rad/m]
  return cs;
}

}  // namespace coriolis
