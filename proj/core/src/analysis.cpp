#include "coriolis/analysis.hpp"

#include <cmath>

namespace coriolis {

double packet_sigma_from_scan_width(const AtomSpecies& species,
                                    const SequenceGeometry& g,
                                    double sigma_omega) {
  return 2.0 * std::sqrt(2.0) * g.bragg_order * species.recoil_velocity() *
         g.pulse_separation * (g.pulse_separation + g.mid_separation) *
         sigma_omega;
}

double packet_sigma_from_delay_width(const AtomSpecies& species,
                                     const SequenceGeometry& g,
                                     double sigma_tau) {
  return 2.0 * g.bragg_order * species.recoil_velocity() * sigma_tau;
}

}  // namespace coriolis
