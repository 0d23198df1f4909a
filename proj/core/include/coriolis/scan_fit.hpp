#ifndef CORIOLIS_SCAN_FIT_HPP
#define CORIOLIS_SCAN_FIT_HPP

#include <span>

#include "coriolis/ellipse.hpp"  // FitError

namespace coriolis {

/// One binned data point of a contrast scan.
struct ScanSample {
  double parameter = 0.0;  // scanned-parameter value (SI)
  double contrast = 0.0;
  double standard_error = 0.0;
};

/// Gaussian fit of contrast versus a scanned parameter,
///   f(p) = offset + amplitude * exp(-(p - center)^2 / (2 width^2)).
/// width is the Gaussian sigma (the 1/sqrt(e) half-width of the peak).
struct ScanFit {
  double center = 0.0;
  double width = 0.0;
  double amplitude = 0.0;
  double offset = 0.0;
  double center_err = 0.0;
  double width_err = 0.0;
  double amplitude_err = 0.0;
  double offset_err = 0.0;
  double chi2 = 0.0;
  int iterations = 0;
  bool weighted = true;
};

/// Weighted (or plain) nonlinear least squares by Levenberg-Marquardt.
/// Requires >= 5 samples; weighted mode requires strictly positive
/// standard errors. Standard errors of the parameters come from the
/// covariance at the optimum, scaled by the reduced chi-square.
/// Throws FitError on non-convergence or a singular normal matrix.
ScanFit fit_gaussian_scan(std::span<const ScanSample> samples,
                          bool weighted = true);

}  // namespace coriolis

#endif  // CORIOLIS_SCAN_FIT_HPP
