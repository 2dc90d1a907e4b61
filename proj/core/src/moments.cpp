#include "qclt/moments.hpp"

#include <cmath>
#include <limits>

namespace qclt {

namespace {

double weighted_sum(const std::vector<double>& density, const std::vector<double>& weight,
                    double step) {
  std::vector<double> prod(density.size());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = density[j] * weight[j];
  return periodic_quadrature(prod, step);
}

double density_moment(const std::vector<double>& density, const std::vector<double>& axis,
                      double step, int k, double shift) {
  std::vector<double> w(axis.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::pow(axis[j] - shift, k);
  return weighted_sum(density, w, step);
}

}  // namespace

double position_moment(const WaveFunction& psi, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("position_moment: k must be in 0..4");
  const std::vector<double> d = position_density(psi);
  std::vector<double> x(d.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = psi.grid.point(j);
  return density_moment(d, x, psi.dx(), k, 0.0);
}

double momentum_moment(const WaveFunction& psi, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("momentum_moment: k must be in 0..4");
  const MomentumRep rep = to_momentum(psi);
  std::vector<double> d(rep.amplitudes.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = std::norm(rep.amplitudes[j]);
  return density_moment(d, rep.p, rep.dp, k, 0.0);
}

CrossMoments cross_moments(const WaveFunction& psi) {
  const double hbar = psi.units.hbar;
  const std::vector<cplx> dpsi = spectral_derivative(psi);
  std::vector<cplx> integrand(dpsi.size());
  for (std::size_t j = 0; j < integrand.size(); ++j) {
    const double x = psi.grid.point(j);
    integrand[j] = std::conj(psi.amplitudes[j]) * x * cplx{0.0, -hbar} * dpsi[j];
  }
  const cplx xp = pairwise_sum(std::span<const cplx>(integrand)) * psi.dx();

  const double mean_x = position_moment(psi, 1);
  const double mean_p = momentum_moment(psi, 1);
  CrossMoments cm;
  cm.cov_c = xp.real() - mean_x * mean_p;
  // <px> = conj(<xp>) for hermitian x and p, so i(<xp> - <px>) = -2 Im<xp>.
  cm.comm_m = -2.0 * xp.imag();
  return cm;
}

MomentSet extract_moments(const WaveFunction& psi, const expr::Ast* g) {
  MomentSet ms;
  ms.units = psi.units;

  const std::vector<double> d = position_density(psi);
  const double dx = psi.dx();

  if (g != nullptr) {
    std::vector<double> gx(d.size());
    for (std::size_t j = 0; j < gx.size(); ++j) {
      const cplx v = expr::evaluate(*g, psi.grid.point(j));
      if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real()))) {
        throw NumericError("extract_moments: g evaluates to non-real values on the support");
      }
      gx[j] = v.real();
    }
    const double m1 = density_moment(d, gx, dx, 1, 0.0);
    const double m2 = density_moment(d, gx, dx, 2, 0.0);
    const double m3 = density_moment(d, gx, dx, 3, 0.0);
    ms.mean_x = m1;
    ms.var_x = density_moment(d, gx, dx, 2, m1);
    ms.x3 = m3;
    ms.validity_ratio = m2 > 0.0 ? std::abs(m3) / m2 : 0.0;
    ms.has_phase_space = false;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ms.mean_p = ms.var_p = ms.cov_c = ms.comm_m = nan;
    return ms;
  }

  std::vector<double> x(d.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = psi.grid.point(j);
  ms.mean_x = density_moment(d, x, dx, 1, 0.0);
  ms.var_x = density_moment(d, x, dx, 2, ms.mean_x);
  ms.x3 = density_moment(d, x, dx, 3, 0.0);
  const double x2 = density_moment(d, x, dx, 2, 0.0);
  ms.validity_ratio = x2 > 0.0 ? std::abs(ms.x3) / x2 : 0.0;

  const MomentumRep rep = to_momentum(psi);
  std::vector<double> pd(rep.amplitudes.size());
  for (std::size_t j = 0; j < pd.size(); ++j) pd[j] = std::norm(rep.amplitudes[j]);
  ms.mean_p = density_moment(pd, rep.p, rep.dp, 1, 0.0);
  ms.var_p = density_moment(pd, rep.p, rep.dp, 2, ms.mean_p);

  const CrossMoments cm = cross_moments(psi);
  ms.cov_c = cm.cov_c;
  ms.comm_m = cm.comm_m;
  return ms;
}

}  // namespace qclt
