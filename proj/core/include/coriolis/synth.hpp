#ifndef CORIOLIS_SYNTH_HPP
#define CORIOLIS_SYNTH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coriolis/constants.hpp"
#include "coriolis/geometry.hpp"
#include "coriolis/kinematics.hpp"
#include "coriolis/species.hpp"
#include "coriolis/wavepacket.hpp"

namespace coriolis {

/// Noise and contrast-baseline model of the synthetic experiment.
///
/// The common vibration phase is uniform on [0, 2pi). The detection noise
/// default of 0.01 is a plausible placeholder (it is not a measured
/// value), chosen so synthetic shot scatter resembles published raw data;
/// override it in the configuration when modeling a specific instrument.
struct NoiseModel {
  double detection_noise_sigma = 0.01;  // additive Gaussian on populations
  /// Contrast at perfect wave-packet overlap versus pulse separation time,
  /// as (T [s], contrast) nodes; linearly interpolated, clamped outside.
  std::vector<std::pair<double, double>> baseline_contrast_nodes = {
      {0.130, 0.40}, {0.160, 0.32}, {0.180, 0.27}, {0.220, 0.20}, {0.250, 0.15}};

  double baseline_contrast(double pulse_separation) const;
};

/// One experimental shot: the four normalized output populations of the
/// conjugate pair. A, B belong to the upper interferometer (A + B = 1
/// before detection noise), C, D to the lower.
struct ShotRecord {
  double pop_a = 0.0;
  double pop_b = 0.0;
  double pop_c = 0.0;
  double pop_d = 0.0;

  double x() const { return (pop_a - pop_b) / (pop_a + pop_b); }
  double y() const { return (pop_c - pop_d) / (pop_c + pop_d); }
};

/// Simulate a single shot. The randomness is fully determined by
/// (seed, point_index, shot_index).
ShotRecord simulate_shot(const AtomSpecies& species, const SequenceGeometry& g,
                         const WavePacket& packet, const NoiseModel& noise,
                         std::uint64_t seed, std::uint64_t point_index,
                         std::uint64_t shot_index,
                         double earth_rate = constants.earth_rotation_rate);

enum class ScanParameter { kCompRateXp, kCompRateYp, kFinalPulseDelay };

/// Parses "comp_rate_xp" / "comp_rate_yp" / "final_pulse_delay"; throws
/// std::invalid_argument for anything else.
ScanParameter scan_parameter_from_string(const std::string& name);
std::string to_string(ScanParameter p);

/// Scan definition in SI units of the scanned parameter.
struct ScanSpec {
  ScanParameter parameter = ScanParameter::kCompRateYp;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  int shots_per_point = 0;
};

struct ScanPoint {
  double parameter_value = 0.0;
  std::vector<ShotRecord> shots;
};

/// Deterministic given (inputs, seed); shots may be generated on several
/// threads, each shot's randomness depends only on its indices.
std::vector<ScanPoint> simulate_scan(
    const AtomSpecies& species, const SequenceGeometry& base,
    const WavePacket& packet, const NoiseModel& noise, const ScanSpec& spec,
    std::uint64_t seed, int threads = 1,
    double earth_rate = constants.earth_rotation_rate);

}  // namespace coriolis

#endif  // CORIOLIS_SYNTH_HPP
