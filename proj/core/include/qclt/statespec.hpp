#ifndef QCLT_STATESPEC_HPP
#define QCLT_STATESPEC_HPP

#include <string>
#include <variant>
#include <vector>

#include "qclt/wavefunction.hpp"

namespace qclt {

/// Gaussian packet psi ~ exp(-(1 + i*chirp)(x-x0)^2 / (4*sigma2))
///                       * exp(i*p0*(x-x0)/hbar).
/// sigma2 is the position-density variance of the unchirped packet.
struct GaussianPacket {
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma2 = 0.5;
  double chirp = 0.0;
};

struct WeightedPacket {
  GaussianPacket packet;
  cplx weight{1.0, 0.0};
};

/// Coherent superposition of Gaussian packets (normalized afterwards).
struct Superposition {
  std::vector<WeightedPacket> packets;
};

struct MixtureComponent {
  double weight = 1.0;
  double mean = 0.0;
  double var = 1.0;
};

/// psi = sqrt of a normal-mixture density: a real, generally skewed state.
struct SqrtMixture {
  std::vector<MixtureComponent> components;
};

/// psi(x) given by an expression in x (module expr).
struct ExpressionState {
  std::string formula;
};

using StateSpec = std::variant<GaussianPacket, Superposition, SqrtMixture, ExpressionState>;

/// Evaluate the spec on the grid, normalize, and enforce containment.
/// Throws ConfigError for malformed specs, NumericError for non-normalizable
/// states or boundary leaks.
WaveFunction build_state(const StateSpec& spec, const GridSpec& grid, const Units& units);

}  // namespace qclt

#endif
