#include "coriolis/ellipse.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace coriolis {

namespace {

// Conic coefficients in the normalized frame u = (x - mx)/s, v = (y - my)/s
// mapped back to data coordinates.
std::array<double, 6> denormalize(const std::array<double, 6>& q, double mx,
                                  double my, double s) {
  const double A = q[0], B = q[1], C = q[2], D = q[3], E = q[4], F = q[5];
  const double s2 = s * s;
  std::array<double, 6> out;
  out[0] = A / s2;
  out[1] = B / s2;
  out[2] = C / s2;
  out[3] = -(2.0 * A * mx + B * my) / s2 + D / s;
  out[4] = -(B * mx + 2.0 * C * my) / s2 + E / s;
  out[5] = (A * mx * mx + B * mx * my + C * my * my) / s2 -
           (D * mx + E * my) / s + F;
  return out;
}

}  // namespace

EllipseFit fit_ellipse(std::span<const Eigen::Vector2d> points) {
  const auto n = points.size();
  if (n < 6) {
    throw FitError("fit_ellipse: at least 6 points required, got " +
                   std::to_string(n));
  }

  // Precondition the data: shift to the centroid, scale to unit rms radius.
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  for (const auto& p : points) mean += p;
  mean /= static_cast<double>(n);
  double rms = 0.0;
  for (const auto& p : points) rms += (p - mean).squaredNorm();
  rms = std::sqrt(rms / static_cast<double>(n));
  if (!(rms > 0.0) || !std::isfinite(rms)) {
    throw FitError("fit_ellipse: degenerate input (zero spread)");
  }

  Eigen::MatrixXd d1(n, 3), d2(n, 3);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (points[i].x() - mean.x()) / rms;
    const double v = (points[i].y() - mean.y()) / rms;
    d1(i, 0) = u * u;
    d1(i, 1) = u * v;
    d1(i, 2) = v * v;
    d2(i, 0) = u;
    d2(i, 1) = v;
    d2(i, 2) = 1.0;
  }

  const Eigen::Matrix3d s1 = d1.transpose() * d1;
  const Eigen::Matrix3d s2 = d1.transpose() * d2;
  const Eigen::Matrix3d s3 = d2.transpose() * d2;

  Eigen::FullPivLU<Eigen::Matrix3d> lu(s3);
  if (!lu.isInvertible()) {
    throw FitError("fit_ellipse: degenerate (collinear or repeated) input");
  }
  const Eigen::Matrix3d t = -lu.solve(s2.transpose());
  const Eigen::Matrix3d m_full = s1 + s2 * t;

  // Apply the inverse of the ellipse-constraint matrix C1.
  Eigen::Matrix3d m;
  m.row(0) = m_full.row(2) / 2.0;
  m.row(1) = -m_full.row(1);
  m.row(2) = m_full.row(0) / 2.0;

  Eigen::EigenSolver<Eigen::Matrix3d> eig(m);
  if (eig.info() != Eigen::Success) {
    throw FitError("fit_ellipse: eigenvalue computation failed");
  }

  // Exactly one eigenvector satisfies the ellipse constraint 4ac - b^2 > 0.
  Eigen::Vector3d quad = Eigen::Vector3d::Zero();
  bool found = false;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d vec = eig.eigenvectors().col(i).real();
    const double cond = 4.0 * vec(0) * vec(2) - vec(1) * vec(1);
    if (cond > 0.0) {
      quad = vec;
      found = true;
      break;
    }
  }
  if (!found) {
    throw FitError("fit_ellipse: no ellipse solution (degenerate conic)");
  }

  const Eigen::Vector3d lin = t * quad;
  std::array<double, 6> norm_conic{quad(0), quad(1), quad(2),
                                   lin(0), lin(1), lin(2)};
  std::array<double, 6> conic = denormalize(norm_conic, mean.x(), mean.y(), rms);

  double norm = 0.0;
  for (double c : conic) norm += c * c;
  norm = std::sqrt(norm);
  const double sign = conic[0] < 0.0 ? -1.0 : 1.0;
  for (double& c : conic) c *= sign / norm;

  const double a = conic[0], b = conic[1], c = conic[2];
  const double d = conic[3], e = conic[4], f = conic[5];
  const double disc = b * b - 4.0 * a * c;
  if (!(disc < 0.0)) {
    throw FitError("fit_ellipse: fitted conic is not an ellipse");
  }

  EllipseFit fit;
  fit.conic = conic;
  fit.center.x() = (2.0 * c * (-d) - b * (-e)) / (-disc);
  fit.center.y() = (2.0 * a * (-e) - b * (-d)) / (-disc);

  const double x0 = fit.center.x();
  const double y0 = fit.center.y();
  const double fc = a * x0 * x0 + b * x0 * y0 + c * y0 * y0 + d * x0 +
                    e * y0 + f;
  if (!(fc < 0.0)) {
    throw FitError("fit_ellipse: fitted conic has no real interior");
  }

  // Extent of the centered ellipse a x^2 + b xy + c y^2 + fc = 0 along each
  // axis: |x| <= 2 sqrt(c fc / disc), |y| <= 2 sqrt(a fc / disc).
  fit.contrast_x = 4.0 * std::sqrt(c * fc / disc);
  fit.contrast_y = 4.0 * std::sqrt(a * fc / disc);

  const double cos_d = std::clamp(-b / (2.0 * std::sqrt(a * c)), -1.0, 1.0);
  fit.differential_phase = std::acos(cos_d);
  return fit;
}

}  // namespace coriolis
