#ifndef QCLT_PROPAGATOR_HPP
#define QCLT_PROPAGATOR_HPP

#include "qclt/wavefunction.hpp"

namespace qclt {

enum class SystemKind { free_particle, constant_force, oscillator };

/// One of the three solvable Hamiltonians:
///   free_particle:  H = p^2/2m
///   constant_force: H = p^2/2m - a*x
///   oscillator:     H = p^2/2m + m*omega^2*x^2/2
struct SystemSpec {
  SystemKind kind = SystemKind::free_particle;
  double a = 0.0;
  double omega = 0.0;

  void validate() const {
    if (kind == SystemKind::oscillator && !(omega > 0.0)) {
      throw ConfigError("system: oscillator requires omega > 0");
    }
  }
};

/// Second-order (Strang) split-operator evolution over time t in n_steps
/// equal steps. Norm-preserving by construction.
///
/// Step-size rule for full accuracy of the splitting: dt <= 0.01/omega for
/// the oscillator, dt <= 0.01*m*dx^2/hbar otherwise. For the free particle
/// the kinetic phase is exact at any dt, and for the constant force the
/// splitting error is a global phase, so moments are exact there as well;
/// the conservative rule matters only for the oscillator.
///
/// Throws NumericError if the state reaches the grid boundary while
/// spreading (containment failure).
WaveFunction propagate(const WaveFunction& psi, const SystemSpec& system, double t,
                       std::size_t n_steps);

/// Step count the CLI uses when none is requested: the oscillator rule
/// above, and dt = 0.01 (natural time units) for the exactly-split systems.
std::size_t default_step_count(const SystemSpec& system, double t);

}  // namespace qclt

#endif
