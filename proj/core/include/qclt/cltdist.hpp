#ifndef QCLT_CLTDIST_HPP
#define QCLT_CLTDIST_HPP

#include <cstdint>

#include "qclt/moments.hpp"

namespace qclt {

/// Principal-axis angle and spread of a symmetric 2x2 form
/// [[var_x, off], [off, var_p]]:
///   delta * cos(2 theta) = var_x - var_p
///   delta * sin(2 theta) = 2 * off_diag
/// theta is quadrant-safe (two-argument arctangent) and 0 when both
/// arguments vanish; theta in (-pi/2, pi/2].
struct RotationParams {
  double theta = 0.0;
  double delta = 0.0;
};
RotationParams rotation_params(double var_x, double var_p, double off_diag);

/// The single-variable limit law: Gaussian with mean <x> and variance
/// sigma_x^2 / N, unit mass.
struct Gaussian1D {
  double mean = 0.0;
  double var = 1.0;
  std::int64_t n = 1;

  double pdf(double x) const;
};

Gaussian1D single_var_density(const MomentSet& ms, std::int64_t n);

/// Unit-mass bivariate Gaussian over (X, P), stored both as a covariance
/// matrix and in rotated principal-axis form (theta, delta, axis variances).
/// The minus-axis variance can come out negative for the commutator-built
/// pair below; pdf() then refuses to evaluate.
struct Gaussian2D {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double cov_xx = 1.0;
  double cov_xp = 0.0;
  double cov_pp = 1.0;
  double theta = 0.0;
  double delta = 0.0;
  double axis_var_plus = 1.0;
  double axis_var_minus = 1.0;
  std::int64_t n = 1;

  bool positive_definite() const;
  double pdf(double X, double P) const;
  Gaussian1D marginal_x() const;
  Gaussian1D marginal_p() const;
};

/// Build directly from first and second moments (covariances already
/// scaled); used by tests and synthetic inputs.
Gaussian2D gaussian2d_from_cov(double mean_x, double mean_p, double cov_xx,
                               double cov_xp, double cov_pp, std::int64_t n = 1);

/// The joint limit law weighting the real coefficient parts: covariance
/// [[var_x, cov_c], [cov_c, var_p]] / n around (<x>, <p>).
Gaussian2D joint_re_density(const MomentSet& ms, std::int64_t n);

/// Zero-total-mass signed pair weighting the imaginary coefficient parts:
/// a rotated component built from the commutator moment minus the product
/// component diag(var_x, var_p)/n. Identically zero when comm_m == 0.
///
/// When var_x * var_p < comm_m^2 (true for near-minimum-uncertainty states)
/// the plus component is not normalizable as a pointwise function; its
/// moments remain well defined through the covariance algebra, and the
/// oracle module integrates the exact characteristic-function form instead.
struct SignedGaussianPair {
  Gaussian2D plus;
  Gaussian2D minus;
  bool identically_zero = false;

  bool pointwise_evaluable() const;
  /// plus.pdf - minus.pdf; throws NumericError unless pointwise_evaluable().
  double value(double X, double P) const;
};

SignedGaussianPair joint_im_density(const MomentSet& ms, std::int64_t n);

}  // namespace qclt

#endif
