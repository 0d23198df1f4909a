#ifndef CORIOLIS_CONSTANTS_HPP
#define CORIOLIS_CONSTANTS_HPP

#include <numbers>

namespace coriolis {

/// Physical constants, CODATA-2010 vintage, frozen so derived results do
/// not drift with library updates. hbar is derived from h so that
/// h == 2*pi*hbar holds to machine precision.
struct PhysicalConstants {
  double h = 6.62606957e-34;               // Planck constant [J s]
  double hbar = 6.62606957e-34 / (2.0 * std::numbers::pi);  // [J s]
  double boltzmann = 1.3806488e-23;        // k_B [J/K]
  double earth_rotation_rate = 7.2921150e-5;  // Omega_earth [rad/s]
  double standard_gravity = 9.80665;       // g [m/s^2]
};

inline constexpr PhysicalConstants constants{};

/// Latitude of the Berkeley laboratory, 37.87 deg.
inline constexpr double kDefaultLatitude = 37.87 * std::numbers::pi / 180.0;

/// Angle enclosed by the two tip-tilt mirror rotation axes, 82 deg.
inline constexpr double kDefaultAxisAngle = 82.0 * std::numbers::pi / 180.0;

}  // namespace coriolis

#endif  // CORIOLIS_CONSTANTS_HPP
