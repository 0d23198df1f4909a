#ifndef CORIOLIS_GEOMETRY_HPP
#define CORIOLIS_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>

#include "coriolis/constants.hpp"

namespace coriolis {

/// Pulse timing and mirror-compensation settings of a conjugate
/// Ramsey-Borde sequence. Angles in rad, times in s, rates in rad/s.
///
/// Sign convention for the compensation rates: a positive rate about
/// either mirror axis opposes the drift caused by Earth's rotation, so
/// full compensation uses positive rates.
struct SequenceGeometry {
  int bragg_order = 1;            // n, momentum transfer 2n*hbar*k
  double pulse_separation = 0.0;  // T, interval between pulses 1-2 and 3-4 [s]
  double mid_separation = 0.0;    // T', interval between pulses 2-3 [s]
  double final_pulse_delay = 0.0; // tau, shift of the fourth pulse [s]
  double latitude = kDefaultLatitude;     // [rad]
  double axis_angle = kDefaultAxisAngle;  // angle between mirror axes x', y' [rad]
  double comp_rate_xp = 0.0;      // applied mirror rate about x' [rad/s]
  double comp_rate_yp = 0.0;      // applied mirror rate about y' [rad/s]
};

/// Initial launch conditions of the atomic ensemble.
struct LaunchState {
  std::array<double, 2> horizontal_velocity{0.0, 0.0};  // (x west, y south) [m/s]
  double ensemble_temperature = 0.0;                     // [K]
};

/// Returns std::nullopt when all invariants hold, otherwise a message
/// naming the first violated field.
std::optional<std::string> validate_geometry(const SequenceGeometry& g);

}  // namespace coriolis

#endif  // CORIOLIS_GEOMETRY_HPP
