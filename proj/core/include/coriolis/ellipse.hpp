#ifndef CORIOLIS_ELLIPSE_HPP
#define CORIOLIS_ELLIPSE_HPP

#include <array>
#include <span>
#include <stdexcept>

#include <Eigen/Core>

namespace coriolis {

/// Thrown when a least-squares fit cannot produce a valid result
/// (degenerate input, non-ellipse conic, non-convergence).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of the direct conic fit to conjugate-interferometer data.
///
/// contrast_x / contrast_y are the full lengths of the projection of the
/// fitted ellipse onto the axes (the unit parameterization
/// (cos t, cos(t+d)) has projection length 2). The fringe amplitude per
/// interferometer is half of that.
struct EllipseFit {
  std::array<double, 6> conic{};  // a x^2 + b xy + c y^2 + d x + e y + f = 0,
                                  // coefficient vector normalized to unit norm
  Eigen::Vector2d center{0.0, 0.0};
  double contrast_x = 0.0;
  double contrast_y = 0.0;
  double differential_phase = 0.0;  // d in (0, pi), cos d = -b / (2 sqrt(ac))
};

/// Direct algebraic least-squares conic fit constrained to ellipses
/// (Halir-Flusser formulation of the Fitzgibbon method). Requires at
/// least 6 points in non-degenerate position; throws FitError otherwise.
EllipseFit fit_ellipse(std::span<const Eigen::Vector2d> points);

}  // namespace coriolis

#endif  // CORIOLIS_ELLIPSE_HPP
