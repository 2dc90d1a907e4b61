#include "qclt/cltdist.hpp"

#include <cmath>

namespace qclt {

namespace {

void check_n(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

}  // namespace

RotationParams rotation_params(double var_x, double var_p, double off_diag) {
  const double diff = var_x - var_p;
  const double off2 = 2.0 * off_diag;
  RotationParams rp;
  rp.delta = std::hypot(diff, off2);
  if (off2 == 0.0 && diff == 0.0) {
    rp.theta = 0.0;  // tie-break: isotropic form
    return rp;
  }
  double theta = 0.5 * std::atan2(off2, diff);
  if (theta <= -0.5 * M_PI) theta += M_PI;  // keep theta in (-pi/2, pi/2]
  rp.theta = theta;
  return rp;
}

double Gaussian1D::pdf(double x) const {
  const double u = x - mean;
  return std::exp(-u * u / (2.0 * var)) / std::sqrt(2.0 * M_PI * var);
}

Gaussian1D single_var_density(const MomentSet& ms, std::int64_t n) {
  check_n(n, "single_var_density");
  if (!(ms.var_x > 0.0)) {
    throw NumericError("single_var_density: var_x must be positive");
  }
  return Gaussian1D{ms.mean_x, ms.var_x / static_cast<double>(n), n};
}

bool Gaussian2D::positive_definite() const {
  return cov_xx > 0.0 && (cov_xx * cov_pp - cov_xp * cov_xp) > 0.0;
}

double Gaussian2D::pdf(double X, double P) const {
  if (!positive_definite()) {
    throw NumericError("Gaussian2D::pdf: covariance is not positive-definite");
  }
  const double det = cov_xx * cov_pp - cov_xp * cov_xp;
  const double dx = X - mean_x;
  const double dp = P - mean_p;
  const double q = (cov_pp * dx * dx - 2.0 * cov_xp * dx * dp + cov_xx * dp * dp) / det;
  return std::exp(-0.5 * q) / (2.0 * M_PI * std::sqrt(det));
}

Gaussian1D Gaussian2D::marginal_x() const { return Gaussian1D{mean_x, cov_xx, n}; }
Gaussian1D Gaussian2D::marginal_p() const { return Gaussian1D{mean_p, cov_pp, n}; }

Gaussian2D gaussian2d_from_cov(double mean_x, double mean_p, double cov_xx,
                               double cov_xp, double cov_pp, std::int64_t n) {
  Gaussian2D g;
  g.mean_x = mean_x;
  g.mean_p = mean_p;
  g.cov_xx = cov_xx;
  g.cov_xp = cov_xp;
  g.cov_pp = cov_pp;
  g.n = n;
  const double dn = static_cast<double>(n);
  const RotationParams rp = rotation_params(cov_xx * dn, cov_pp * dn, cov_xp * dn);
  g.theta = rp.theta;
  g.delta = rp.delta;
  const double trace = (cov_xx + cov_pp) * dn;
  g.axis_var_plus = (trace + rp.delta) / (2.0 * dn);
  g.axis_var_minus = (trace - rp.delta) / (2.0 * dn);
  return g;
}

Gaussian2D joint_re_density(const MomentSet& ms, std::int64_t n) {
  check_n(n, "joint_re_density");
  ms.require_phase_space("joint_re_density");
  const double dn = static_cast<double>(n);
  return gaussian2d_from_cov(ms.mean_x, ms.mean_p, ms.var_x / dn, ms.cov_c / dn,
                             ms.var_p / dn, n);
}

bool SignedGaussianPair::pointwise_evaluable() const {
  return plus.positive_definite() && minus.positive_definite();
}

double SignedGaussianPair::value(double X, double P) const {
  if (identically_zero) return 0.0;
  if (!pointwise_evaluable()) {
    throw NumericError(
        "SignedGaussianPair::value: plus component is not normalizable "
        "(var_x*var_p < comm_m^2); use the characteristic-function oracle");
  }
  return plus.pdf(X, P) - minus.pdf(X, P);
}

SignedGaussianPair joint_im_density(const MomentSet& ms, std::int64_t n) {
  check_n(n, "joint_im_density");
  ms.require_phase_space("joint_im_density");
  const double dn = static_cast<double>(n);
  SignedGaussianPair pair;
  pair.plus = gaussian2d_from_cov(ms.mean_x, ms.mean_p, ms.var_x / dn,
                                  ms.comm_m / dn, ms.var_p / dn, n);
  pair.minus = gaussian2d_from_cov(ms.mean_x, ms.mean_p, ms.var_x / dn, 0.0,
                                   ms.var_p / dn, n);
  pair.identically_zero = ms.comm_m == 0.0;
  return pair;
}

}  // namespace qclt
