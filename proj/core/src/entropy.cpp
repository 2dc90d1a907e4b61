#include "qclt/entropy.hpp"

#include <cmath>
#include <limits>

namespace qclt {

double dent_closed(const MomentSet& ms) {
  ms.require_phase_space("dent_closed");
  if (!(ms.var_x > 0.0) || !(ms.var_p > 0.0)) {
    throw NumericError("dent_closed: variances must be positive");
  }
  const double rho2 = ms.cov_c * ms.cov_c / (ms.var_x * ms.var_p);
  if (rho2 >= 1.0) {
    return std::numeric_limits<double>::infinity();  // degenerate covariance
  }
  return -0.5 * ms.units.k_b * std::log1p(-rho2);
}

double dent_quadrature(const Gaussian2D& dist, double k_b, std::size_t points_per_axis,
                       double extent) {
  if (!dist.positive_definite()) {
    throw NumericError("dent_quadrature: covariance is not positive-definite");
  }
  const double ratio = dist.axis_var_plus / dist.axis_var_minus;
  if (!(ratio < 1e12)) {
    throw NumericError("dent_quadrature: near-singular covariance (condition " +
                       std::to_string(ratio) + ")");
  }
  const Gaussian1D mx = dist.marginal_x();
  const Gaussian1D mp = dist.marginal_p();
  const double ct = std::cos(dist.theta);
  const double st = std::sin(dist.theta);

  auto integrand = [&](double u, double v) {
    const double X = dist.mean_x + u * ct - v * st;
    const double P = dist.mean_p + u * st + v * ct;
    const double pr = dist.pdf(X, P);
    if (pr < 1e-300) return 0.0;
    return pr * std::log(pr / (mx.pdf(X) * mp.pdf(P)));
  };
  const double hu = extent * std::sqrt(dist.axis_var_plus);
  const double hv = extent * std::sqrt(dist.axis_var_minus);
  return k_b * quad2d(integrand, 0.0, 0.0, hu, hv, points_per_axis);
}

EntropySeries entropy_series(const SystemSpec& system, const MomentSet& ms0, double t0,
                             double t1, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("entropy_series: need >= 2 samples");
  ms0.require_phase_space("entropy_series");

  EntropySeries series;
  series.times.resize(n_samples);
  series.var_x.resize(n_samples);
  series.var_p.resize(n_samples);
  series.cov_c.resize(n_samples);
  series.dent.resize(n_samples);

  const double step = (t1 - t0) / static_cast<double>(n_samples - 1);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = t0 + static_cast<double>(i) * step;
    const MomentSet ms = evolve_moments(system, ms0, t);
    series.times[i] = t;
    series.var_x[i] = ms.var_x;
    series.var_p[i] = ms.var_p;
    series.cov_c[i] = ms.cov_c;
    series.dent[i] = dent_closed(ms);
  }
  return series;
}

}  // namespace qclt
