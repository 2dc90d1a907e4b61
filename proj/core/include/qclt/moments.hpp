#ifndef QCLT_MOMENTS_HPP
#define QCLT_MOMENTS_HPP

#include "qclt/expr.hpp"
#include "qclt/wavefunction.hpp"

namespace qclt {

/// The scalar statistics of one constituent that parameterize every
/// coarse-grained limit distribution:
///   mean_x, mean_p   first moments
///   var_x, var_p     central second moments
///   cov_c            symmetrized covariance <xp>_c = <xp+px>/2 - <x><p>
///   comm_m           commutator moment i<xp - px>; equals -hbar on states
///   x3               raw third moment <x^3> (or <g^3> under a g-transform)
///   validity_ratio   |<x^3>|/<x^2> with raw moments; the blocking
///                    approximation wants N >> validity_ratio
/// After a g-transform only the x-side fields are meaningful and
/// has_phase_space is false (the p-side fields are NaN).
struct MomentSet {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double cov_c = 0.0;
  double comm_m = 0.0;
  double x3 = 0.0;
  double validity_ratio = 0.0;
  Units units{};
  bool has_phase_space = true;

  void require_phase_space(const char* who) const {
    if (!has_phase_space) {
      throw NumericError(std::string(who) + ": momentum-side moments are unavailable "
                                            "for a g-transformed moment set");
    }
  }
};

/// <x^k> against |psi|^2, k in 0..4, trapezoid quadrature.
double position_moment(const WaveFunction& psi, int k);

/// <p^k> against the momentum density, k in 0..4.
double momentum_moment(const WaveFunction& psi, int k);

/// (cov_c, comm_m) via <x p> computed with the spectral derivative.
struct CrossMoments {
  double cov_c = 0.0;
  double comm_m = 0.0;
};
CrossMoments cross_moments(const WaveFunction& psi);

/// Bundle all scalars. When g is given, x-moments become moments of g(x)
/// under |psi|^2 and the momentum side is disabled; g must evaluate real on
/// the grid support.
MomentSet extract_moments(const WaveFunction& psi, const expr::Ast* g = nullptr);

}  // namespace qclt

#endif
