#ifndef CORIOLIS_WAVEPACKET_HPP
#define CORIOLIS_WAVEPACKET_HPP

#include <Eigen/Core>

#include "coriolis/species.hpp"

namespace coriolis {

/// Gaussian wave packet, diagonal in the lab principal frame. sigma holds
/// the 1/sqrt(e) position widths (sigma_x, sigma_y, sigma_z) [m]; the
/// width matrix is A = diag(sigma_i^-2).
struct WavePacket {
  Eigen::Vector3d sigma{0.0, 0.0, 0.0};
};

/// Overlap of a packet with a copy of itself displaced by delta:
/// exp(-1/4 sum_i delta_i^2 / sigma_i^2). In (0, 1].
double overlap(const WavePacket& packet, const Eigen::Vector3d& delta);

/// Alternative rate-space parameterization of the contrast factor,
/// exp(-omega^2 / (2 sigma_omega^2)), used when the scan width is quoted
/// directly as a rotation-rate width.
double rate_width_overlap(double omega, double sigma_omega);

/// Temperature equivalent of a single packet's momentum spread along one
/// axis: T_i = hbar^2 / (m k_B sigma_i^2).
double effective_temperature(const AtomSpecies& species, double sigma_i);

/// h / sqrt(2 pi m k_B T).
double thermal_de_broglie(const AtomSpecies& species, double temperature);

/// Vertical packet size set by a Doppler-sensitive velocity-selection
/// pulse of 1/sqrt(e) duration pulse_sigma: v_r * pulse_sigma / 2.
double velocity_selection_sigma(const AtomSpecies& species, double pulse_sigma);

}  // namespace coriolis

#endif  // CORIOLIS_WAVEPACKET_HPP
