#ifndef CORIOLIS_CONFIG_HPP
#define CORIOLIS_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coriolis/geometry.hpp"
#include "coriolis/species.hpp"
#include "coriolis/synth.hpp"
#include "coriolis/wavepacket.hpp"

namespace coriolis {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full description of one simulated experiment. The text format is a
/// flat key = value file; keys carry their unit in the name (T_ms,
/// rate_yp_urad_per_s, sigma_x_nm, ...) and are converted to SI here, at
/// the boundary. Unknown keys are rejected.
struct ExperimentConfig {
  std::string label = "run";
  std::string species_name = "cesium";
  SequenceGeometry geometry{
      .bragg_order = 5,
      .pulse_separation = 0.250,
      .mid_separation = 0.002,
  };
  WavePacket packet{{105e-9, 86e-9, 813e-9}};
  NoiseModel noise{};
  bool has_scan = false;
  ScanSpec scan{};
  int bin_size = 20;
  std::uint64_t seed = 1;
  double earth_rate = constants.earth_rotation_rate;  // [rad/s]
  LaunchState launch{{0.01, 0.0}, 1.2e-6};
  double vs_pulse_sigma = 500e-6;         // velocity-selection pulse width [s]
  double compensation_residual = 0.017;   // fractional rate accuracy

  AtomSpecies species() const;

  /// Throws ConfigError if any module-level invariant is violated.
  void validate() const;
};

/// Parse the key = value text form. Messages carry 1-based line numbers.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Canonical text form; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ExperimentConfig& c);

/// Built-in presets: "table1" (five pulse-separation times, y' rate scan),
/// "fig3" (compensated vs uncompensated shot clouds), "fig5-left"
/// (x' rate scan), "fig5-right" (final-pulse delay scan).
std::vector<ExperimentConfig> load_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace coriolis

#endif  // CORIOLIS_CONFIG_HPP
