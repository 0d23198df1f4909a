#ifndef CORIOLIS_PIPELINE_HPP
#define CORIOLIS_PIPELINE_HPP

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "coriolis/config.hpp"
#include "coriolis/scan_fit.hpp"
#include "coriolis/stats.hpp"
#include "coriolis/synth.hpp"

namespace coriolis {

/// Everything produced for one scan: the raw shots, the binned contrast
/// curve, and (when the scan has enough points) the Gaussian fit.
struct ScanResult {
  ExperimentConfig config;
  std::vector<ScanPoint> points;
  std::vector<BinnedContrast> binned;
  std::optional<ScanFit> fit;
};

/// Simulate the configured scan and analyze it.
ScanResult run_scan_job(const ExperimentConfig& config, bool weighted = true,
                        int threads = 1);

/// Analyze externally provided shots under the given configuration (the
/// geometry is needed to convert fitted widths to packet sizes).
ScanResult analyze_points(const ExperimentConfig& config,
                          std::vector<ScanPoint> points, bool weighted = true);

/// Fit results plus derived packet sizes as a JSON record. Field names
/// carry units; conventions are spelled out in the record itself.
nlohmann::json scan_result_json(const ScanResult& result);

/// Phase budget, closure error, contrast factors, rotation systematics
/// and wave-packet numbers for the configured operating point.
nlohmann::json report_json(const ExperimentConfig& config);

}  // namespace coriolis

#endif  // CORIOLIS_PIPELINE_HPP
