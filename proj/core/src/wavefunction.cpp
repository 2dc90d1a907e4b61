#include "qclt/wavefunction.hpp"

#include <cmath>

#include "qclt/errors.hpp"
#include "qclt/fft.hpp"

namespace qclt {

double norm_l2(const WaveFunction& psi) {
  std::vector<double> d = position_density(psi);
  return std::sqrt(periodic_quadrature(d, psi.dx()));
}

std::vector<double> position_density(const WaveFunction& psi) {
  std::vector<double> d(psi.amplitudes.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = std::norm(psi.amplitudes[j]);
  return d;
}

void validate_state(const WaveFunction& psi) {
  psi.grid.validate();
  psi.units.validate();
  if (psi.amplitudes.size() != psi.grid.n_points) {
    throw NumericError("wavefunction: amplitude count does not match the grid");
  }
  const double n = norm_l2(psi);
  if (std::abs(n - 1.0) > 1e-10) {
    throw NumericError("wavefunction: norm deviates from 1 by " + std::to_string(n - 1.0));
  }
  const double edge =
      std::max(std::abs(psi.amplitudes.front()), std::abs(psi.amplitudes.back()));
  if (!(edge < 1e-8)) {
    throw NumericError("wavefunction: state leaks past the grid boundary (|psi| = " +
                       std::to_string(edge) + " at the edge)");
  }
}

MomentumRep to_momentum(const WaveFunction& psi) {
  const std::size_t n = psi.amplitudes.size();
  const double hbar = psi.units.hbar;
  const double dx = psi.dx();
  const double dk = psi.grid.dk();

  MomentumRep rep;
  rep.amplitudes.resize(n);
  rep.p.resize(n);
  rep.dp = hbar * dk;

  fft::dft(psi.amplitudes, rep.amplitudes, -1);

  const double scale = dx / std::sqrt(2.0 * M_PI * hbar);
  for (std::size_t k = 0; k < n; ++k) {
    const double kappa =
        dk * (k < n / 2 ? static_cast<double>(k)
                        : static_cast<double>(k) - static_cast<double>(n));
    rep.p[k] = hbar * kappa;
    // Phase referencing x_min makes this the sampled continuum transform.
    const double phase = -rep.p[k] * psi.grid.x_min / hbar;
    rep.amplitudes[k] *= scale * cplx{std::cos(phase), std::sin(phase)};
  }
  return rep;
}

std::vector<cplx> spectral_derivative(const WaveFunction& psi) {
  const std::size_t n = psi.amplitudes.size();
  const double dk = psi.grid.dk();
  std::vector<cplx> spec(n);
  fft::dft(psi.amplitudes, spec, -1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == n / 2) {
      spec[k] = 0.0;  // Nyquist
      continue;
    }
    const double kappa =
        dk * (k < n / 2 ? static_cast<double>(k)
                        : static_cast<double>(k) - static_cast<double>(n));
    spec[k] *= cplx{0.0, kappa};
  }
  fft::dft(spec, +1);
  const double scale = 1.0 / static_cast<double>(n);
  for (cplx& v : spec) v *= scale;
  return spec;
}

double fidelity(const WaveFunction& a, const WaveFunction& b) {
  std::vector<cplx> prod(a.amplitudes.size());
  for (std::size_t j = 0; j < prod.size(); ++j) {
    prod[j] = std::conj(a.amplitudes[j]) * b.amplitudes[j];
  }
  return std::abs(pairwise_sum(std::span<const cplx>(prod)) * a.dx());
}

double l2_distance(const WaveFunction& a, const WaveFunction& b, bool align_phase) {
  cplx phase{1.0, 0.0};
  if (align_phase) {
    std::vector<cplx> prod(a.amplitudes.size());
    for (std::size_t j = 0; j < prod.size(); ++j) {
      prod[j] = std::conj(a.amplitudes[j]) * b.amplitudes[j];
    }
    const cplx overlap = pairwise_sum(std::span<const cplx>(prod));
    if (std::abs(overlap) > 0.0) phase = overlap / std::abs(overlap);
  }
  std::vector<double> diff(a.amplitudes.size());
  for (std::size_t j = 0; j < diff.size(); ++j) {
    diff[j] = std::norm(b.amplitudes[j] - phase * a.amplitudes[j]);
  }
  return std::sqrt(periodic_quadrature(diff, a.dx()));
}

}  // namespace qclt
