#ifndef QCLT_DYNAMICS_HPP
#define QCLT_DYNAMICS_HPP

#include "qclt/moments.hpp"
#include "qclt/propagator.hpp"

namespace qclt {

/// Closed-form Heisenberg-picture moment flow for the three solvable
/// systems. The covariance maps follow from the same operator solutions as
/// the variance maps; all three flows conserve
/// var_x*var_p - cov_c^2 and leave comm_m fixed at -hbar.
///
/// Third moments are not propagated (they would need cross statistics the
/// moment set does not carry); x3 and validity_ratio come back NaN.
MomentSet evolve_moments(const SystemSpec& system, const MomentSet& ms0, double t);

/// Time-reversal companion: flips the signs of mean_p and cov_c.
MomentSet reversed(const MomentSet& ms);

/// Closed-form flow vs split-operator propagation of an actual grid state.
struct PropagatorCheck {
  MomentSet closed;
  MomentSet propagated;
  double diff_mean_x = 0.0;
  double diff_mean_p = 0.0;
  double diff_var_x = 0.0;
  double diff_var_p = 0.0;
  double diff_cov_c = 0.0;
  double max_abs_diff = 0.0;
};

PropagatorCheck verify_against_propagator(const SystemSpec& system,
                                          const WaveFunction& psi0, double t,
                                          std::size_t n_steps);

}  // namespace qclt

#endif
