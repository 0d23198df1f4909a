#include "coriolis/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "coriolis/phases.hpp"
#include "coriolis/rng.hpp"

namespace coriolis {

double NoiseModel::baseline_contrast(double pulse_separation) const {
  const auto& nodes = baseline_contrast_nodes;
  if (nodes.empty()) {
    throw std::invalid_argument("NoiseModel: baseline_contrast_nodes empty");
  }
  if (pulse_separation <= nodes.front().first) return nodes.front().second;
  if (pulse_separation >= nodes.back().first) return nodes.back().second;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (pulse_separation <= nodes[i].first) {
      const auto& [t0, c0] = nodes[i - 1];
      const auto& [t1, c1] = nodes[i];
      const double w = (pulse_separation - t0) / (t1 - t0);
      return c0 + w * (c1 - c0);
    }
  }
  return nodes.back().second;
}

ShotRecord simulate_shot(const AtomSpecies& species, const SequenceGeometry& g,
                         const WavePacket& packet, const NoiseModel& noise,
                         std::uint64_t seed, std::uint64_t point_index,
                         std::uint64_t shot_index, double earth_rate) {
  RandomStream rng = RandomStream::for_shot(seed, point_index, shot_index);

  const double common_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double diff_phase =
      std::fmod(conjugate_phases(species, g).differential,
                2.0 * std::numbers::pi);
  const double contrast = noise.baseline_contrast(g.pulse_separation) *
                          overlap(packet, closure_error(species, g, earth_rate));

  const double x = contrast * std::cos(common_phase);
  const double y = contrast * std::cos(common_phase + diff_phase);

  ShotRecord shot;
  shot.pop_a = (1.0 + x) / 2.0;
  shot.pop_b = (1.0 - x) / 2.0;
  shot.pop_c = (1.0 + y) / 2.0;
  shot.pop_d = (1.0 - y) / 2.0;

  if (noise.detection_noise_sigma > 0.0) {
    const double s = noise.detection_noise_sigma;
    shot.pop_a = std::clamp(shot.pop_a + s * rng.normal(), 0.0, 1.0);
    shot.pop_b = std::clamp(shot.pop_b + s * rng.normal(), 0.0, 1.0);
    shot.pop_c = std::clamp(shot.pop_c + s * rng.normal(), 0.0, 1.0);
    shot.pop_d = std::clamp(shot.pop_d + s * rng.normal(), 0.0, 1.0);
  }
  return shot;
}

ScanParameter scan_parameter_from_string(const std::string& name) {
  if (name == "comp_rate_xp") return ScanParameter::kCompRateXp;
  if (name == "comp_rate_yp") return ScanParameter::kCompRateYp;
  if (name == "final_pulse_delay") return ScanParameter::kFinalPulseDelay;
  throw std::invalid_argument("unknown scan parameter: " + name);
}

std::string to_string(ScanParameter p) {
  switch (p) {
    case ScanParameter::kCompRateXp: return "comp_rate_xp";
    case ScanParameter::kCompRateYp: return "comp_rate_yp";
    case ScanParameter::kFinalPulseDelay: return "final_pulse_delay";
  }
  return "unknown";
}

namespace {

SequenceGeometry with_parameter(const SequenceGeometry& base, ScanParameter p,
                                double value) {
  SequenceGeometry g = base;
  switch (p) {
    case ScanParameter::kCompRateXp: g.comp_rate_xp = value; break;
    case ScanParameter::kCompRateYp: g.comp_rate_yp = value; break;
    case ScanParameter::kFinalPulseDelay: g.final_pulse_delay = value; break;
  }
  return g;
}

}  // namespace

std::vector<ScanPoint> simulate_scan(const AtomSpecies& species,
                                     const SequenceGeometry& base,
                                     const WavePacket& packet,
                                     const NoiseModel& noise,
                                     const ScanSpec& spec, std::uint64_t seed,
                                     int threads, double earth_rate) {
  if (spec.points < 1) {
    throw std::invalid_argument("simulate_scan: scan needs at least 1 point");
  }
  if (spec.shots_per_point < 0) {
    throw std::invalid_argument("simulate_scan: negative shots_per_point");
  }
  if (auto err = validate_geometry(base)) {
    throw std::invalid_argument("simulate_scan: " + *err);
  }

  std::vector<ScanPoint> out(spec.points);
  const double step =
      spec.points > 1 ? (spec.stop - spec.start) / (spec.points - 1) : 0.0;

  auto run_point = [&](int i) {
    const double value = spec.start + step * i;
    const SequenceGeometry g = with_parameter(base, spec.parameter, value);
    ScanPoint& point = out[i];
    point.parameter_value = value;
    point.shots.resize(spec.shots_per_point);
    for (int s = 0; s < spec.shots_per_point; ++s) {
      point.shots[s] = simulate_shot(species, g, packet, noise, seed,
                                     static_cast<std::uint64_t>(i),
                                     static_cast<std::uint64_t>(s), earth_rate);
    }
  };

  if (threads <= 1 || spec.points == 1) {
    for (int i = 0; i < spec.points; ++i) run_point(i);
  } else {
    const int n_threads = std::min(threads, spec.points);
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
      pool.emplace_back([&, t] {
        for (int i = t; i < spec.points; i += n_threads) run_point(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace coriolis
