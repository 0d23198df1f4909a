#ifndef CORIOLIS_ANALYSIS_HPP
#define CORIOLIS_ANALYSIS_HPP

#include "coriolis/geometry.hpp"
#include "coriolis/species.hpp"

namespace coriolis {

/// Wave-packet width from the fitted rotation-rate width of a contrast
/// scan: sigma = 2 sqrt(2) n v_r T (T + T') sigma_omega. sigma_omega is
/// the Gaussian sigma of the contrast peak versus the rate.
double packet_sigma_from_scan_width(const AtomSpecies& species,
                                    const SequenceGeometry& g,
                                    double sigma_omega);

/// Vertical wave-packet width from the fitted width of a final-pulse
/// delay scan: sigma_z = 2 n v_r sigma_tau. sigma_tau is the delay-scan
/// width in the overlap-form convention exp(-tau^2 / (4 sigma_tau^2)),
/// i.e. the delay at which the displacement equals sigma_z; this equals
/// the Gaussian sigma of the peak divided by sqrt(2).
double packet_sigma_from_delay_width(const AtomSpecies& species,
                                     const SequenceGeometry& g,
                                     double sigma_tau);

}  // namespace coriolis

#endif  // CORIOLIS_ANALYSIS_HPP
