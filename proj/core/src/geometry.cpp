#include "coriolis/geometry.hpp"

#include <cmath>
#include <numbers>

namespace coriolis {

std::optional<std::string> validate_geometry(const SequenceGeometry& g) {
  if (g.bragg_order < 1) {
    return "bragg_order: must be a positive integer (n >= 1)";
  }
  if (!(g.pulse_separation > 0.0) || !std::isfinite(g.pulse_separation)) {
    return "pulse_separation: T must be finite and > 0";
  }
  if (g.mid_separation < 0.0 || !std::isfinite(g.mid_separation)) {
    return "mid_separation: T' must be finite and >= 0";
  }
  if (!std::isfinite(g.final_pulse_delay)) {
    return "final_pulse_delay: tau must be finite";
  }
  if (!(g.axis_angle > 0.0) || !(g.axis_angle < std::numbers::pi)) {
    return "axis_angle: must lie strictly between 0 and pi";
  }
  if (std::abs(g.latitude) > std::numbers::pi / 2.0) {
    return "latitude: must lie in [-pi/2, pi/2]";
  }
  if (!std::isfinite(g.comp_rate_xp)) {
    return "comp_rate_xp: must be finite";
  }
  if (!std::isfinite(g.comp_rate_yp)) {
    return "comp_rate_yp: must be finite";
  }
  return std::nullopt;
}

}  // namespace coriolis
