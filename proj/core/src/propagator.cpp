#include "qclt/propagator.hpp"

#include <cmath>

#include "qclt/errors.hpp"
#include "qclt/fft.hpp"

namespace qclt {

WaveFunction propagate(const WaveFunction& psi, const SystemSpec& system, double t,
                       std::size_t n_steps) {
  if (n_steps < 1) throw std::invalid_argument("propagate: n_steps must be >= 1");
  system.validate();

  const std::size_t n = psi.amplitudes.size();
  const double dt = t / static_cast<double>(n_steps);
  const double hbar = psi.units.hbar;
  const double m = psi.units.mass;
  const double dk = psi.grid.dk();

  // Position-space half-step phases exp(-i V dt / 2 hbar).
  std::vector<cplx> pot_half(n, cplx{1.0, 0.0});
  if (system.kind != SystemKind::free_particle) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = psi.grid.point(j);
      const double v = system.kind == SystemKind::constant_force
                           ? -system.a * x
                           : 0.5 * m * system.omega * system.omega * x * x;
      const double phase = -v * dt / (2.0 * hbar);
      pot_half[j] = cplx{std::cos(phase), std::sin(phase)};
    }
  }

  // Momentum-space full-step phases exp(-i p^2 dt / 2 m hbar).
  std::vector<cplx> kin(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kappa =
        dk * (k < n / 2 ? static_cast<double>(k)
                        : static_cast<double>(k) - static_cast<double>(n));
    const double p = hbar * kappa;
    const double phase = -p * p * dt / (2.0 * m * hbar);
    kin[k] = cplx{std::cos(phase), std::sin(phase)};
  }

  WaveFunction out = psi;
  std::vector<cplx>& a = out.amplitudes;
  std::vector<cplx> spec(n);
  const double inv_n = 1.0 / static_cast<double>(n);

  for (std::size_t step = 0; step < n_steps; ++step) {
    if (system.kind != SystemKind::free_particle) {
      for (std::size_t j = 0; j < n; ++j) a[j] *= pot_half[j];
    }
    fft::dft(a, spec, -1);
    for (std::size_t k = 0; k < n; ++k) spec[k] *= kin[k];
    fft::dft(spec, a, +1);
    for (std::size_t j = 0; j < n; ++j) a[j] *= inv_n;
    if (system.kind != SystemKind::free_particle) {
      for (std::size_t j = 0; j < n; ++j) a[j] *= pot_half[j];
    }
    const double edge = std::max(std::abs(a.front()), std::abs(a.back()));
    if (!(edge < 1e-8)) {
      throw NumericError("propagate: state reached the grid boundary at step " +
                         std::to_string(step + 1) + " of " + std::to_string(n_steps));
    }
  }
  return out;
}

std::size_t default_step_count(const SystemSpec& system, double t) {
  const double at = std::abs(t);
  double dt = 0.01;
  if (system.kind == SystemKind::oscillator) dt = 0.01 / system.omega;
  const double steps = std::ceil(at / dt);
  return steps < 1.0 ? 1 : static_cast<std::size_t>(steps);
}

}  // namespace qclt
