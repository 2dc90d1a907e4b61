#include "qclt/statespec.hpp"

#include <cmath>

#include "qclt/errors.hpp"
#include "qclt/expr.hpp"

namespace qclt {

namespace {

cplx packet_amplitude(const GaussianPacket& g, double x, double hbar) {
  const double u = x - g.x0;
  const cplx exponent = -cplx{1.0, g.chirp} * u * u / (4.0 * g.sigma2) +
                        cplx{0.0, g.p0 * u / hbar};
  return std::exp(exponent);
}

void check_packet(const GaussianPacket& g) {
  if (!(g.sigma2 > 0.0)) throw ConfigError("gaussian packet: sigma2 must be positive");
}

std::vector<cplx> raw_amplitudes(const StateSpec& spec, const GridSpec& grid,
                                 const Units& units) {
  const std::size_t n = grid.n_points;
  std::vector<cplx> amps(n);

  if (const auto* g = std::get_if<GaussianPacket>(&spec)) {
    check_packet(*g);
    for (std::size_t j = 0; j < n; ++j) {
      amps[j] = packet_amplitude(*g, grid.point(j), units.hbar);
    }
  } else if (const auto* sup = std::get_if<Superposition>(&spec)) {
    if (sup->packets.empty()) throw ConfigError("superposition: no packets given");
    for (const auto& wp : sup->packets) check_packet(wp.packet);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = grid.point(j);
      cplx acc{0.0, 0.0};
      for (const auto& wp : sup->packets) {
        acc += wp.weight * packet_amplitude(wp.packet, x, units.hbar);
      }
      amps[j] = acc;
    }
  } else if (const auto* mix = std::get_if<SqrtMixture>(&spec)) {
    if (mix->components.empty()) throw ConfigError("sqrt_mixture: no components given");
    for (const auto& c : mix->components) {
      if (!(c.weight > 0.0)) throw ConfigError("sqrt_mixture: weights must be positive");
      if (!(c.var > 0.0)) throw ConfigError("sqrt_mixture: variances must be positive");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double x = grid.point(j);
      double density = 0.0;
      for (const auto& c : mix->components) {
        const double u = x - c.mean;
        density += c.weight * std::exp(-u * u / (2.0 * c.var)) /
                   std::sqrt(2.0 * M_PI * c.var);
      }
      amps[j] = std::sqrt(density);
    }
  } else if (const auto* ex = std::get_if<ExpressionState>(&spec)) {
    const expr::Ast ast = expr::parse(ex->formula);
    for (std::size_t j = 0; j < n; ++j) {
      amps[j] = expr::evaluate(ast, grid.point(j));
    }
  }
  return amps;
}

}  // namespace

WaveFunction build_state(const StateSpec& spec, const GridSpec& grid, const Units& units) {
  grid.validate();
  units.validate();

  WaveFunction psi{grid, units, raw_amplitudes(spec, grid, units)};

  std::vector<double> d = position_density(psi);
  const double mass = periodic_quadrature(d, grid.dx());
  if (!std::isfinite(mass) || !(mass > 1e-300)) {
    throw NumericError("build_state: non-normalizable amplitudes (norm^2 = " +
                       std::to_string(mass) + ")");
  }
  const double inv = 1.0 / std::sqrt(mass);
  for (cplx& a : psi.amplitudes) a *= inv;

  validate_state(psi);
  return psi;
}

}  // namespace qclt
