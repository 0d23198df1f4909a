#include <doctest.h>

#include <string>

#include "coriolis/config.hpp"

using namespace coriolis;

TEST_CASE("defaults validate and describe the reference instrument") {
  ExperimentConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(c.species_name == "cesium");
  CHECK(c.geometry.bragg_order == 5);
  CHECK(c.geometry.pulse_separation == doctest::Approx(0.250));
  CHECK(c.packet.sigma[0] == doctest::Approx(105e-9));
  CHECK(c.packet.sigma[2] == doctest::Approx(813e-9));
}

TEST_CASE("serialize / parse round-trip preserves every field") {
  ExperimentConfig c;
  c.label = "roundtrip";
  c.geometry.pulse_separation = 0.1234;
  c.geometry.comp_rate_xp = -26.2e-6;
  c.geometry.comp_rate_yp = 57.56e-6;
  c.geometry.final_pulse_delay = -13e-6;
  c.packet.sigma = {101e-9, 87.5e-9, 820e-9};
  c.noise.detection_noise_sigma = 0.013;
  c.has_scan = true;
  c.scan.parameter = ScanParameter::kCompRateYp;
  c.scan.start = -55e-6;
  c.scan.stop = 175e-6;
  c.scan.points = 21;
  c.scan.shots_per_point = 100;
  c.bin_size = 25;
  c.seed = 4242;
  c.launch.horizontal_velocity = {0.011, -0.002};
  c.launch.ensemble_temperature = 1.5e-6;
  c.vs_pulse_sigma = 480e-6;
  c.compensation_residual = 0.02;

  const ExperimentConfig back = parse_config(serialize_config(c));
  CHECK(back.label == c.label);
  CHECK(back.geometry.pulse_separation ==
        doctest::Approx(c.geometry.pulse_separation).epsilon(1e-14));
  CHECK(back.geometry.comp_rate_xp ==
        doctest::Approx(c.geometry.comp_rate_xp).epsilon(1e-14));
  CHECK(back.geometry.comp_rate_yp ==
        doctest::Approx(c.geometry.comp_rate_yp).epsilon(1e-14));
  CHECK(back.geometry.final_pulse_delay ==
        doctest::Approx(c.geometry.final_pulse_delay).epsilon(1e-14));
  CHECK(back.packet.sigma[1] ==
        doctest::Approx(c.packet.sigma[1]).epsilon(1e-14));
  CHECK(back.noise.detection_noise_sigma ==
        doctest::Approx(c.noise.detection_noise_sigma).epsilon(1e-14));
  CHECK(back.has_scan);
  CHECK(back.scan.parameter == c.scan.parameter);
  CHECK(back.scan.start == doctest::Approx(c.scan.start).epsilon(1e-14));
  CHECK(back.scan.stop == doctest::Approx(c.scan.stop).epsilon(1e-14));
  CHECK(back.scan.points == c.scan.points);
  CHECK(back.scan.shots_per_point == c.scan.shots_per_point);
  CHECK(back.bin_size == c.bin_size);
  CHECK(back.seed == c.seed);
  CHECK(back.launch.horizontal_velocity[0] ==
        doctest::Approx(c.launch.horizontal_velocity[0]).epsilon(1e-14));
  CHECK(back.launch.ensemble_temperature ==
        doctest::Approx(c.launch.ensemble_temperature).epsilon(1e-14));
  CHECK(back.vs_pulse_sigma ==
        doctest::Approx(c.vs_pulse_sigma).epsilon(1e-14));
  CHECK(back.compensation_residual ==
        doctest::Approx(c.compensation_residual).epsilon(1e-14));
}

TEST_CASE("parser rejects malformed input with line numbers") {
  try {
    parse_config("T_ms = 130\nbogus_key = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("bogus_key") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_config("T_ms = not_a_number\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("just some text\n"), ConfigError);
  // A scan window without a scan parameter is incoherent.
  CHECK_THROWS_AS(parse_config("scan_start_urad_per_s = -55\n"), ConfigError);
  // Delay scans must use time units for the window, rate scans rate units.
  CHECK_THROWS_AS(
      parse_config("scan_parameter = final_pulse_delay\n"
                   "scan_start_urad_per_s = -55\nscan_stop_urad_per_s = 55\n"
                   "scan_points = 5\nshots_per_point = 40\n"),
      ConfigError);
  CHECK_THROWS_AS(
      parse_config("scan_parameter = comp_rate_yp\n"
                   "scan_start_us = -55\nscan_stop_us = 55\n"
                   "scan_points = 5\nshots_per_point = 40\n"),
      ConfigError);
}

TEST_CASE("comments and blank lines are ignored") {
  const ExperimentConfig c = parse_config(
      "# instrument\n"
      "\n"
      "T_ms = 180  # pulse separation\n"
      "seed = 9\n");
  CHECK(c.geometry.pulse_separation == doctest::Approx(0.180));
  CHECK(c.seed == 9);
}

TEST_CASE("validation catches out-of-range physics") {
  ExperimentConfig c;
  c.packet.sigma[0] = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);

  ExperimentConfig c2;
  c2.species_name = "rubidium";
  CHECK_THROWS_AS(c2.validate(), ConfigError);

  ExperimentConfig c3;
  c3.bin_size = 4;
  CHECK_THROWS_AS(c3.validate(), ConfigError);
}

TEST_CASE("presets are registered and valid") {
  const auto names = preset_names();
  REQUIRE(names.size() == 4);
  for (const auto& name : names) {
    const auto jobs = load_preset(name);
    CHECK(!jobs.empty());
    for (const auto& job : jobs) {
      CHECK_NOTHROW(job.validate());
      CHECK(job.has_scan);
    }
  }
  CHECK_THROWS_AS(load_preset("fig7"), ConfigError);
}

TEST_CASE("table1 preset spans the five pulse separation times") {
  const auto jobs = load_preset("table1");
  REQUIRE(jobs.size() == 5);
  const double expected_t[] = {0.130, 0.160, 0.180, 0.220, 0.250};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CHECK(jobs[i].geometry.pulse_separation ==
          doctest::Approx(expected_t[i]).epsilon(1e-12));
    CHECK(jobs[i].geometry.comp_rate_xp ==
          doctest::Approx(-26.2e-6).epsilon(1e-12));
    CHECK(jobs[i].scan.parameter == ScanParameter::kCompRateYp);
    CHECK(jobs[i].scan.points == 21);
    CHECK(jobs[i].scan.shots_per_point == 200);
  }
  // Seeds differ so the five scans are statistically independent.
  CHECK(jobs[0].seed != jobs[1].seed);
}

TEST_CASE("fig5-right preset is a delay scan") {
  const auto jobs = load_preset("fig5-right");
  REQUIRE(jobs.size() == 1);
  CHECK(jobs[0].scan.parameter == ScanParameter::kFinalPulseDelay);
  CHECK(jobs[0].geometry.pulse_separation == doctest::Approx(0.130));
  CHECK(jobs[0].scan.start == doctest::Approx(-100e-6));
  CHECK(jobs[0].scan.stop == doctest::Approx(100e-6));
}
