#include "coriolis/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace coriolis {

std::vector<BinnedContrast> binned_contrast(std::span<const ScanPoint> points,
                                            int bin_size,
                                            Interferometer which) {
  if (bin_size < 6) {
    throw std::invalid_argument(
        "binned_contrast: bin_size must be >= 6 (ellipse fit minimum)");
  }

  std::vector<BinnedContrast> out;
  out.reserve(points.size());
  for (const auto& point : points) {
    const int n_bins = static_cast<int>(point.shots.size()) / bin_size;
    if (n_bins < 2) {
      throw FitError(
          "binned_contrast: need at least 2*bin_size shots per point, got " +
          std::to_string(point.shots.size()));
    }

    std::vector<double> contrasts;
    contrasts.reserve(n_bins);
    std::vector<Eigen::Vector2d> bin(bin_size);
    for (int b = 0; b < n_bins; ++b) {
      for (int i = 0; i < bin_size; ++i) {
        const ShotRecord& s = point.shots[b * bin_size + i];
        bin[i] = Eigen::Vector2d(s.x(), s.y());
      }
      try {
        const EllipseFit fit = fit_ellipse(bin);
        const double span = which == Interferometer::kUpper ? fit.contrast_x
                                                            : fit.contrast_y;
        contrasts.push_back(span / 2.0);  // fringe amplitude
      } catch (const FitError&) {
        // A noise-dominated bin can fail to fit; skip it.
      }
    }
    if (contrasts.size() < 2) {
      throw FitError("binned_contrast: fewer than 2 bins fitted at parameter " +
                     std::to_string(point.parameter_value));
    }

    double mean = 0.0;
    for (double c : contrasts) mean += c;
    mean /= static_cast<double>(contrasts.size());
    double var = 0.0;
    for (double c : contrasts) var += (c - mean) * (c - mean);
    var /= static_cast<double>(contrasts.size() - 1);

    BinnedContrast entry;
    entry.parameter_value = point.parameter_value;
    entry.mean_contrast = mean;
    entry.standard_error = std::sqrt(var / static_cast<double>(contrasts.size()));
    entry.bin_count = static_cast<int>(contrasts.size());
    out.push_back(entry);
  }
  return out;
}

WeightedMean weighted_mean(
    std::span<const std::pair<double, double>> values_with_errors) {
  if (values_with_errors.empty()) {
    throw std::invalid_argument("weighted_mean: no values");
  }
  double sum_w = 0.0;
  double sum_wx = 0.0;
  for (const auto& [value, error] : values_with_errors) {
    if (!(error > 0.0)) {
      throw std::invalid_argument("weighted_mean: non-positive error bar");
    }
    const double w = 1.0 / (error * error);
    sum_w += w;
    sum_wx += w * value;
  }
  return WeightedMean{sum_wx / sum_w, 1.0 / std::sqrt(sum_w)};
}

}  // namespace coriolis
