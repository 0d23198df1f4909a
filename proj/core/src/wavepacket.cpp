#include "coriolis/wavepacket.hpp"

#include <cmath>
#include <numbers>

namespace coriolis {

double overlap(const WavePacket& packet, const Eigen::Vector3d& delta) {
  double quad = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double s = packet.sigma[i];
    quad += delta[i] * delta[i] / (s * s);
  }
  return std::exp(-0.25 * quad);
}

double rate_width_overlap(double omega, double sigma_omega) {
  const double r = omega / sigma_omega;
  return std::exp(-0.5 * r * r);
}

double effective_temperature(const AtomSpecies& species, double sigma_i) {
  return constants.hbar * constants.hbar /
         (species.mass * constants.boltzmann * sigma_i * sigma_i);
}

double thermal_de_broglie(const AtomSpecies& species, double temperature) {
  return constants.h /
         std::sqrt(2.0 * std::numbers::pi * species.mass *
                   constants.boltzmann * temperature);
}

double velocity_selection_sigma(const AtomSpecies& species, double pulse_sigma) {
  return species.recoil_velocity() * pulse_sigma / 2.0;
}

}  // namespace coriolis
