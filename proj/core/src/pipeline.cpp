#include "coriolis/pipeline.hpp"

#include <cmath>

#include "coriolis/analysis.hpp"
#include "coriolis/kinematics.hpp"
#include "coriolis/phases.hpp"
#include "coriolis/wavepacket.hpp"

namespace coriolis {

namespace {

std::vector<ScanSample> to_samples(const std::vector<BinnedContrast>& binned) {
  std::vector<ScanSample> samples;
  samples.reserve(binned.size());
  for (const auto& b : binned) {
    samples.push_back({b.parameter_value, b.mean_contrast, b.standard_error});
  }
  return samples;
}

}  // namespace

ScanResult analyze_points(const ExperimentConfig& config,
                          std::vector<ScanPoint> points, bool weighted) {
  config.validate();
  ScanResult result;
  result.config = config;
  result.points = std::move(points);
  result.binned = binned_contrast(result.points, config.bin_size);

  if (result.binned.size() >= 5) {
    auto samples = to_samples(result.binned);
    bool use_weights = weighted;
    if (use_weights) {
      for (const auto& s : samples) {
        if (!(s.standard_error > 0.0)) {
          use_weights = false;  // degenerate error bars, fall back
          break;
        }
      }
    }
    result.fit = fit_gaussian_scan(samples, use_weights);
  }
  return result;
}

ScanResult run_scan_job(const ExperimentConfig& config, bool weighted,
                        int threads) {
  config.validate();
  if (!config.has_scan) {
    throw ConfigError("scan requested but the configuration has no scan "
                      "(scan_parameter = none)");
  }
  auto points = simulate_scan(config.species(), config.geometry, config.packet,
                              config.noise, config.scan, config.seed, threads,
                              config.earth_rate);
  return analyze_points(config, std::move(points), weighted);
}

nlohmann::json scan_result_json(const ScanResult& result) {
  const ExperimentConfig& c = result.config;
  const bool is_delay =
      c.has_scan && c.scan.parameter == ScanParameter::kFinalPulseDelay;

  nlohmann::json j;
  j["label"] = c.label;
  j["parameter"] = c.has_scan ? to_string(c.scan.parameter) : "none";
  j["parameter_unit"] = is_delay ? "s" : "rad/s";
  j["bin_size"] = c.bin_size;
  j["seed"] = c.seed;

  j["binned"] = nlohmann::json::array();
  for (const auto& b : result.binned) {
    j["binned"].push_back({{"parameter_value", b.parameter_value},
                           {"mean_contrast", b.mean_contrast},
                           {"standard_error", b.standard_error},
                           {"bin_count", b.bin_count}});
  }

  if (!result.fit) {
    j["fit"] = nullptr;
    return j;
  }
  const ScanFit& fit = *result.fit;
  j["fit"] = {
      {"center", fit.center},
      {"center_err", fit.center_err},
      {"width", fit.width},
      {"width_err", fit.width_err},
      {"amplitude", fit.amplitude},
      {"amplitude_err", fit.amplitude_err},
      {"offset", fit.offset},
      {"offset_err", fit.offset_err},
      {"chi2", fit.chi2},
      {"iterations", fit.iterations},
      {"weighted", fit.weighted},
      {"width_convention", "gaussian sigma: exp(-x^2 / (2 w^2))"},
  };

  const AtomSpecies species = c.species();
  if (is_delay) {
    // The delay-to-size conversion is defined for the overlap-form width
    // exp(-x^2 / (4 w^2)), the delay at which the packet displacement
    // equals sigma_z; that is the sigma width divided by sqrt(2).
    const double w = fit.width / std::sqrt(2.0);
    const double w_err = fit.width_err / std::sqrt(2.0);
    j["derived"] = {
        {"overlap_form_width_s", w},
        {"overlap_form_width_err_s", w_err},
        {"overlap_form_convention", "exp(-x^2 / (4 w^2))"},
        {"packet_sigma_z_m", packet_sigma_from_delay_width(species, c.geometry, w)},
        {"packet_sigma_z_err_m",
         packet_sigma_from_delay_width(species, c.geometry, w_err)},
    };
  } else if (c.has_scan) {
    j["derived"] = {
        {"packet_sigma_m",
         packet_sigma_from_scan_width(species, c.geometry, fit.width)},
        {"packet_sigma_err_m",
         packet_sigma_from_scan_width(species, c.geometry, fit.width_err)},
    };
  }
  return j;
}

nlohmann::json report_json(const ExperimentConfig& config) {
  config.validate();
  const AtomSpecies species = config.species();
  const SequenceGeometry& g = config.geometry;
  const double earth = config.earth_rate;

  nlohmann::json j;
  j["label"] = config.label;

  j["species"] = {
      {"name", config.species_name},
      {"mass_kg", species.mass},
      {"wavenumber_rad_per_m", species.wavenumber},
      {"recoil_velocity_m_per_s", species.recoil_velocity()},
      {"recoil_rate_rad_per_s", species.recoil_rate()},
  };

  const PhaseBudget budget = conjugate_phases(species, g);
  j["phases"] = {
      {"recoil_phase_rad", budget.recoil_phase},
      {"gravity_phase_rad", budget.gravity_phase},
      {"total_upper_rad", budget.total_upper},
      {"total_lower_rad", budget.total_lower},
      {"differential_rad", budget.differential},
      {"gravitational_area_phase_rad", gravitational_area_phase(species, g)},
      {"gravitational_area_phase_basis",
       "2*n*k*g*T*(T+T') evaluated directly from the configured timing; "
       "no empirical correction applied"},
  };

  const ClosureVector delta = closure_error(species, g, earth);
  j["kinematics"] = {
      {"compensated_rate_rad_per_s", compensated_rate(g, earth)},
      {"residual_west_rate_rad_per_s", residual_west_rate(g)},
      {"closure_error_m", {delta.x(), delta.y(), delta.z()}},
      {"closure_error_magnitude_m", delta.norm()},
      {"rate_sign_convention",
       "positive applied mirror rate opposes the Earth-induced drift"},
  };

  // Contrast factor in both parameterizations: position form from the
  // overlap integral, rate form from the equivalent rotation-rate width.
  const double area = g.pulse_separation * (g.pulse_separation + g.mid_separation);
  const double sigma_omega =
      config.packet.sigma[0] /
      (2.0 * std::sqrt(2.0) * g.bragg_order * species.recoil_velocity() * area);
  j["contrast"] = {
      {"overlap_factor", overlap(config.packet, delta)},
      {"rate_form_sigma_omega_rad_per_s", sigma_omega},
      {"rate_form_factor",
       rate_width_overlap(compensated_rate(g, earth), sigma_omega)},
      {"baseline_contrast", config.noise.baseline_contrast(g.pulse_separation)},
  };

  const Eigen::Vector3d v0(config.launch.horizontal_velocity[0],
                           config.launch.horizontal_velocity[1], 0.0);
  const double dg = delta_g(v0, g.latitude, earth);
  j["systematics"] = {
      {"mach_zehnder_phase_rad",
       mach_zehnder_rotation_phase(species, v0, g.pulse_separation, g.latitude,
                                   WavevectorConvention::kEffective, earth)},
      {"wavevector_convention", "effective two-photon wavevector, |k| = 2k"},
      {"delta_g_m_per_s2", dg},
      {"delta_g_over_g", dg / constants.standard_gravity},
      {"delta_g_compensated_m_per_s2", dg * config.compensation_residual},
      {"delta_g_compensated_over_g",
       dg * config.compensation_residual / constants.standard_gravity},
      {"compensation_residual", config.compensation_residual},
  };

  j["wavepacket"] = {
      {"sigma_m",
       {config.packet.sigma[0], config.packet.sigma[1], config.packet.sigma[2]}},
      {"thermal_de_broglie_m",
       thermal_de_broglie(species, config.launch.ensemble_temperature)},
      {"effective_temperature_K",
       {effective_temperature(species, config.packet.sigma[0]),
        effective_temperature(species, config.packet.sigma[1]),
        effective_temperature(species, config.packet.sigma[2])}},
      {"velocity_selection_sigma_m",
       velocity_selection_sigma(species, config.vs_pulse_sigma)},
  };
  return j;
}

}  // namespace coriolis
