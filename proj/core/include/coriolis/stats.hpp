#ifndef CORIOLIS_STATS_HPP
#define CORIOLIS_STATS_HPP

#include <span>
#include <utility>
#include <vector>

#include "coriolis/ellipse.hpp"
#include "coriolis/synth.hpp"

namespace coriolis {

/// Which interferometer's contrast to extract from the ellipse fit.
enum class Interferometer { kUpper, kLower };

/// Contrast statistics for one value of the scanned parameter, obtained
/// by ellipse-fitting bins of shots and averaging over the bins.
struct BinnedContrast {
  double parameter_value = 0.0;
  double mean_contrast = 0.0;   // fringe amplitude (half the projection span)
  double standard_error = 0.0;  // over bins
  int bin_count = 0;
};

/// Splits each scan point's shots into bins of bin_size, ellipse-fits each
/// bin, and reports mean and standard error of the per-bin contrast.
/// Every point needs at least 2*bin_size shots; throws FitError otherwise.
std::vector<BinnedContrast> binned_contrast(
    std::span<const ScanPoint> points, int bin_size = 20,
    Interferometer which = Interferometer::kUpper);

struct WeightedMean {
  double mean = 0.0;
  double error = 0.0;
};

/// Inverse-variance weighted mean and its standard error of (value, error)
/// pairs. Requires at least one pair and strictly positive errors.
WeightedMean weighted_mean(
    std::span<const std::pair<double, double>> values_with_errors);

}  // namespace coriolis

#endif  // CORIOLIS_STATS_HPP
