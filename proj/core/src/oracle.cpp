#include "qclt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qclt/fft.hpp"

namespace qclt {

namespace {

cplx cpow_int(cplx base, std::int64_t e) {
  cplx acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

double ipow(double base, int e) {
  double acc = 1.0;
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

double Density1D::mass() const { return trapezoid(values, axis.dx); }

double Density1D::mean() const {
  std::vector<double> w(values.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = values[j] * axis.point(j);
  return trapezoid(w, axis.dx);
}

double Density1D::variance() const {
  const double m = mean();
  std::vector<double> w(values.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double u = axis.point(j) - m;
    w[j] = values[j] * u * u;
  }
  return trapezoid(w, axis.dx);
}

Density1D convolve_density(const WaveFunction& psi, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("convolve_density: n must be >= 1");
  if (n > (1 << 14)) throw std::invalid_argument("convolve_density: n exceeds 2^14");

  const std::size_t npts = psi.amplitudes.size();
  const double dx = psi.dx();

  // Discrete masses p_j = |psi_j|^2 dx, sum == 1.
  std::vector<double> p(npts);
  for (std::size_t j = 0; j < npts; ++j) p[j] = std::norm(psi.amplitudes[j]) * dx;

  const std::size_t full = static_cast<std::size_t>(n) * (npts - 1) + 1;
  const std::size_t padded = next_power_of_two(full);

  std::vector<cplx> spec = fft::rdft(p, padded);
  for (cplx& s : spec) s = cpow_int(s, n);
  std::vector<double> q = fft::irdft(spec, padded);

  // Everything beyond the linear-convolution support is wrap residue.
  double junk = 0.0;
  for (std::size_t j = full; j < padded; ++j) junk += std::abs(q[j]);
  if (junk > 1e-8) {
    throw NumericError("convolve_density: aliasing detected (wrap mass " +
                       std::to_string(junk) + ")");
  }
  q.resize(full);
  for (double& v : q) {
    if (v < -1e-9) {
      throw NumericError("convolve_density: significantly negative density value");
    }
    if (v < 0.0) v = 0.0;
  }
  const double total = pairwise_sum(q);
  const double inv = 1.0 / total;

  Density1D out;
  out.axis = Axis{psi.grid.x_min, dx / static_cast<double>(n), full};
  out.values.resize(full);
  const double scale = inv * static_cast<double>(n) / dx;
  for (std::size_t j = 0; j < full; ++j) out.values[j] = q[j] * scale;
  return out;
}

double standardized_sup_error(const Density1D& d, const Gaussian1D& g) {
  const double s = std::sqrt(g.var);
  double sup = 0.0;
  for (std::size_t j = 0; j < d.values.size(); ++j) {
    const double z = (d.axis.point(j) - g.mean) / s;
    const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
    sup = std::max(sup, std::abs(d.values[j] * s - phi));
  }
  return sup;
}

double kl_divergence(const Density1D& d, const Gaussian1D& g) {
  std::vector<double> terms(d.values.size(), 0.0);
  for (std::size_t j = 0; j < d.values.size(); ++j) {
    const double f = d.values[j];
    const double gj = g.pdf(d.axis.point(j));
    if (f > 1e-300 && gj > 1e-300) terms[j] = f * std::log(f / gj);
  }
  return trapezoid(terms, d.axis.dx);
}

double exact_block_moment(const MomentSet& ms, std::int64_t n, BlockMoment which) {
  if (n < 1) throw std::invalid_argument("exact_block_moment: n must be >= 1");
  const double dn = static_cast<double>(n);
  switch (which) {
    case BlockMoment::mean_x:
      return ms.mean_x;
    case BlockMoment::mean_p:
      ms.require_phase_space("exact_block_moment");
      return ms.mean_p;
    case BlockMoment::var_x:
      return ms.var_x / dn;
    case BlockMoment::var_p:
      ms.require_phase_space("exact_block_moment");
      return ms.var_p / dn;
    case BlockMoment::sym_cov:
      ms.require_phase_space("exact_block_moment");
      return ms.cov_c / dn;
    case BlockMoment::commutator:
      ms.require_phase_space("exact_block_moment");
      return ms.comm_m / dn;
    case BlockMoment::x3: {
      const double x1 = ms.mean_x;
      const double x2 = ms.var_x + x1 * x1;
      const double x3 = ms.x3;
      return (dn * x3 + 3.0 * dn * (dn - 1.0) * x2 * x1 +
              dn * (dn - 1.0) * (dn - 2.0) * x1 * x1 * x1) /
             (dn * dn * dn);
    }
  }
  throw std::invalid_argument("exact_block_moment: unknown moment kind");
}

RateReport fit_convergence_rate(const WaveFunction& psi,
                                std::span<const std::int64_t> n_values) {
  if (n_values.size() < 3) {
    throw std::invalid_argument("fit_convergence_rate: need at least 3 n values");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 2) {
      throw std::invalid_argument("fit_convergence_rate: every n must be >= 2");
    }
    if (i > 0 && n_values[i] <= n_values[i - 1]) {
      throw std::invalid_argument("fit_convergence_rate: n values must be increasing");
    }
  }

  const MomentSet ms = extract_moments(psi);
  std::vector<double> sup, kl;
  for (std::int64_t n : n_values) {
    const Density1D d = convolve_density(psi, n);
    const Gaussian1D g = single_var_density(ms, n);
    sup.push_back(standardized_sup_error(d, g));
    kl.push_back(kl_divergence(d, g));
  }
  return summarize_rate({n_values.begin(), n_values.end()}, std::move(sup), std::move(kl));
}

RateReport summarize_rate(std::vector<std::int64_t> n_values,
                          std::vector<double> sup_errors, std::vector<double> kl_errors) {
  RateReport report;
  report.n_values = std::move(n_values);
  report.sup_errors = std::move(sup_errors);
  report.kl_errors = std::move(kl_errors);

  const double worst = *std::max_element(report.sup_errors.begin(), report.sup_errors.end());
  if (worst < 1e-10) {
    report.exact_fixed_point = true;  // Gaussian input: blocking fixed point
    return report;
  }

  std::vector<double> ln(report.n_values.size()), le(report.n_values.size());
  for (std::size_t i = 0; i < report.n_values.size(); ++i) {
    ln[i] = std::log(static_cast<double>(report.n_values[i]));
    le[i] = std::log(report.sup_errors[i]);
  }
  const LineFit fit = fit_line(ln, le);
  report.fitted_exponent = fit.slope;
  report.fit_residual = fit.rms_residual;
  return report;
}

double im_moment_quadrature(const MomentSet& ms, std::int64_t n, int mx, int mp,
                            std::size_t grid_points, double extent_sigmas) {
  if (n < 1) throw std::invalid_argument("im_moment_quadrature: n must be >= 1");
  if (grid_points % 4 != 0 || grid_points < 8) {
    throw std::invalid_argument("im_moment_quadrature: grid_points must be a multiple of 4");
  }
  ms.require_phase_space("im_moment_quadrature");
  if (ms.comm_m == 0.0) return 0.0;  // pair is identically zero

  const std::size_t M = grid_points;
  const double dn = static_cast<double>(n);
  const double umax = extent_sigmas * std::sqrt(ms.var_x / dn);
  const double vmax = extent_sigmas * std::sqrt(ms.var_p / dn);
  const double du = 2.0 * umax / static_cast<double>(M);
  const double dv = 2.0 * vmax / static_cast<double>(M);
  const double dw = 2.0 * M_PI / (static_cast<double>(M) * du);
  const double dl = 2.0 * M_PI / (static_cast<double>(M) * dv);
  const double half = static_cast<double>(M) / 2.0;

  // chi on the (w, l) grid, pre-multiplied by the (-1)^(j+k) parity factor
  // that recenters the transform (valid because M is a multiple of 4).
  std::vector<cplx> chi(M * M);
  for (std::size_t j = 0; j < M; ++j) {
    const double w = (static_cast<double>(j) - half) * dw;
    for (std::size_t k = 0; k < M; ++k) {
      const double l = (static_cast<double>(k) - half) * dl;
      const double q = (w * w * ms.var_x + l * l * ms.var_p + 2.0 * w * l * ms.cov_c) /
                       (2.0 * dn);
      const double val = -2.0 * std::exp(-q) * std::sin(w * l * ms.comm_m / (2.0 * dn));
      const double parity = ((j + k) & 1) ? -1.0 : 1.0;
      chi[j * M + k] = parity * val;
    }
  }
  std::vector<cplx> transformed(M * M);
  fft::dft2(chi, transformed, M, M, +1);

  const double scale = dw * dl / (4.0 * M_PI * M_PI);
  std::vector<double> rows(M);
  std::vector<double> row(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double u = (static_cast<double>(j) - half) * du;
    const double xw = ipow(ms.mean_x + u, mx);
    for (std::size_t k = 0; k < M; ++k) {
      const double v = (static_cast<double>(k) - half) * dv;
      const double parity = ((j + k) & 1) ? -1.0 : 1.0;
      const double pim = parity * transformed[j * M + k].real() * scale;
      row[k] = xw * ipow(ms.mean_p + v, mp) * pim;
    }
    rows[j] = pairwise_sum(row) * dv;
  }
  return pairwise_sum(rows) * du;
}

}  // namespace qclt
