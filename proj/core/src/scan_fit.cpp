#include "coriolis/scan_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace coriolis {

namespace {

struct Model {
  // p = (offset, amplitude, center, width)
  static double eval(const Eigen::Vector4d& p, double x) {
    const double z = (x - p(2)) / p(3);
    return p(0) + p(1) * std::exp(-0.5 * z * z);
  }

  static Eigen::Vector4d gradient(const Eigen::Vector4d& p, double x) {
    const double z = (x - p(2)) / p(3);
    const double e = std::exp(-0.5 * z * z);
    Eigen::Vector4d g;
    g(0) = 1.0;
    g(1) = e;
    g(2) = p(1) * e * z / p(3);
    g(3) = p(1) * e * z * z / p(3);
    return g;
  }
};

double chi_square(std::span<const ScanSample> samples,
                  const Eigen::VectorXd& weights, const Eigen::Vector4d& p) {
  double chi2 = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double r = (Model::eval(p, samples[i].parameter) -
                      samples[i].contrast) * weights(i);
    chi2 += r * r;
  }
  return chi2;
}

Eigen::Vector4d initial_guess(std::span<const ScanSample> samples) {
  auto [min_it, max_it] = std::minmax_element(
      samples.begin(), samples.end(),
      [](const ScanSample& a, const ScanSample& b) { return a.contrast < b.contrast; });

  const double offset = min_it->contrast;
  const double amplitude = max_it->contrast - min_it->contrast;
  const double center = max_it->parameter;

  // Half the FWHM estimate from the half-maximum threshold crossings.
  const double threshold = offset + amplitude / 2.0;
  double lo = center, hi = center;
  for (const auto& s : samples) {
    if (s.contrast >= threshold) {
      lo = std::min(lo, s.parameter);
      hi = std::max(hi, s.parameter);
    }
  }
  double width = (hi - lo) / 2.0;
  if (!(width > 0.0)) {
    auto [pmin, pmax] = std::minmax_element(
        samples.begin(), samples.end(),
        [](const ScanSample& a, const ScanSample& b) { return a.parameter < b.parameter; });
    width = (pmax->parameter - pmin->parameter) / 4.0;
  }
  if (!(width > 0.0)) width = 1.0;
  return Eigen::Vector4d(offset, amplitude, center, width);
}

}  // namespace

ScanFit fit_gaussian_scan(std::span<const ScanSample> samples, bool weighted) {
  const std::size_t n = samples.size();
  if (n < 5) {
    throw FitError("fit_gaussian_scan: at least 5 points required, got " +
                   std::to_string(n));
  }

  Eigen::VectorXd weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weighted) {
      if (!(samples[i].standard_error > 0.0)) {
        throw FitError(
            "fit_gaussian_scan: weighted fit requires positive standard "
            "errors (point " + std::to_string(i) + ")");
      }
      weights(i) = 1.0 / samples[i].standard_error;
    } else {
      weights(i) = 1.0;
    }
  }

  Eigen::Vector4d p = initial_guess(samples);
  double chi2 = chi_square(samples, weights, p);
  double lambda = 1e-3;
  constexpr int kMaxIterations = 200;
  int iter = 0;
  bool converged = false;

  Eigen::Matrix4d jtj = Eigen::Matrix4d::Zero();

  for (; iter < kMaxIterations; ++iter) {
    jtj.setZero();
    Eigen::Vector4d jtr = Eigen::Vector4d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      const double w = weights(i);
      const Eigen::Vector4d g = Model::gradient(p, samples[i].parameter) * w;
      const double r =
          (Model::eval(p, samples[i].parameter) - samples[i].contrast) * w;
      jtj += g * g.transpose();
      jtr += g * r;
    }

    if (jtr.norm() < 1e-14 * std::max(1.0, p.norm())) {
      converged = true;
      break;
    }

    bool accepted = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      Eigen::Matrix4d damped = jtj;
      for (int k = 0; k < 4; ++k) {
        damped(k, k) += lambda * std::max(jtj(k, k), 1e-30);
      }
      Eigen::LDLT<Eigen::Matrix4d> solver(damped);
      if (solver.info() != Eigen::Success) {
        lambda *= 10.0;
        continue;
      }
      const Eigen::Vector4d step = solver.solve(-jtr);
      const Eigen::Vector4d candidate = p + step;
      if (!(std::abs(candidate(3)) > 0.0) || !candidate.allFinite()) {
        lambda *= 10.0;
        continue;
      }
      const double chi2_new = chi_square(samples, weights, candidate);
      if (chi2_new <= chi2) {
        const double drop = chi2 - chi2_new;
        p = candidate;
        chi2 = chi2_new;
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
        if (drop < 1e-12 * std::max(chi2, 1e-300) ||
            step.norm() < 1e-12 * std::max(1.0, p.norm())) {
          converged = true;
        }
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e14) break;
    }

    if (converged) break;
    if (!accepted) {
      // No downhill step available: treat the current point as the optimum
      // if the gradient is already small, otherwise fail.
      if (jtr.norm() < 1e-8 * std::max(1.0, chi2)) {
        converged = true;
        break;
      }
      throw FitError("fit_gaussian_scan: no convergence (stalled)");
    }
  }

  if (!converged) {
    throw FitError("fit_gaussian_scan: iteration cap reached without "
                   "convergence");
  }

  p(3) = std::abs(p(3));  // the model is even in the width

  // Covariance of the parameters, scaled by the reduced chi-square.
  jtj.setZero();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector4d g =
        Model::gradient(p, samples[i].parameter) * weights(i);
    jtj += g * g.transpose();
  }
  Eigen::FullPivLU<Eigen::Matrix4d> lu(jtj);
  if (!lu.isInvertible()) {
    throw FitError("fit_gaussian_scan: singular Jacobian at the optimum");
  }
  const double dof = static_cast<double>(n) - 4.0;
  const double scale = dof > 0.0 ? chi_square(samples, weights, p) / dof : 1.0;
  const Eigen::Matrix4d cov = lu.inverse() * scale;

  ScanFit fit;
  fit.offset = p(0);
  fit.amplitude = p(1);
  fit.center = p(2);
  fit.width = p(3);
  fit.offset_err = std::sqrt(std::max(cov(0, 0), 0.0));
  fit.amplitude_err = std::sqrt(std::max(cov(1, 1), 0.0));
  fit.center_err = std::sqrt(std::max(cov(2, 2), 0.0));
  fit.width_err = std::sqrt(std::max(cov(3, 3), 0.0));
  fit.chi2 = chi_square(samples, weights, p);
  fit.iterations = iter;
  fit.weighted = weighted;
  return fit;
}

}  // namespace coriolis
