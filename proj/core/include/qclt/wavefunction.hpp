#ifndef QCLT_WAVEFUNCTION_HPP
#define QCLT_WAVEFUNCTION_HPP

#include <vector>

#include "qclt/grid.hpp"
#include "qclt/numerics.hpp"
#include "qclt/units.hpp"

namespace qclt {

/// Single-particle state on a uniform periodic grid. Immutable by
/// convention: every operation returns a fresh value.
struct WaveFunction {
  GridSpec grid;
  Units units;
  std::vector<cplx> amplitudes;

  double dx() const { return grid.dx(); }
};

/// L2 norm, sqrt(sum |psi_j|^2 dx).
double norm_l2(const WaveFunction& psi);

/// |psi_j|^2 samples.
std::vector<double> position_density(const WaveFunction& psi);

/// Enforce the state invariants: unit norm within 1e-10 and boundary
/// amplitudes below 1e-8 (containment). Throws NumericError.
void validate_state(const WaveFunction& psi);

/// Momentum representation on the conjugate grid (FFT bin ordering).
/// Normalized so that sum |amplitudes_k|^2 dp = 1.
struct MomentumRep {
  std::vector<cplx> amplitudes;
  std::vector<double> p;  // hbar-scaled momenta, FFT ordering
  double dp = 0.0;
};

MomentumRep to_momentum(const WaveFunction& psi);

/// d(psi)/dx via the spectral derivative (Nyquist mode dropped, which keeps
/// the operator exactly anti-hermitian on the grid).
std::vector<cplx> spectral_derivative(const WaveFunction& psi);

/// |<a|b>| for states on the same grid.
double fidelity(const WaveFunction& a, const WaveFunction& b);

/// L2 distance between states on the same grid, minimized over a global
/// phase when align_phase is true.
double l2_distance(const WaveFunction& a, const WaveFunction& b, bool align_phase = false);

}  // namespace qclt

#endif
