#ifndef QCLT_ORACLE_HPP
#define QCLT_ORACLE_HPP

#include "qclt/cltdist.hpp"
#include "qclt/wavefunction.hpp"

namespace qclt {

/// Sampled nonnegative density with unit mass, produced by the exact
/// finite-N convolution oracle.
struct Density1D {
  Axis axis;
  std::vector<double> values;

  double mass() const;
  double mean() const;
  double variance() const;
};

/// Exact density of X = (1/n) sum x_i for n iid copies of |psi|^2, via
/// n-fold self-convolution in a zero-padded spectral domain (no circular
/// wrap by construction; residual wrap mass is checked and surfaced).
/// n is capped at 2^14.
Density1D convolve_density(const WaveFunction& psi, std::int64_t n);

/// Sup-norm distance between the oracle density and the CLT Gaussian after
/// standardizing X -> (X - mean)/sigma, which makes the distance scale-free.
double standardized_sup_error(const Density1D& d, const Gaussian1D& g);

/// KL divergence of the oracle density from the CLT Gaussian, restricted to
/// points where both densities exceed 1e-300.
double kl_divergence(const Density1D& d, const Gaussian1D& g);

enum class BlockMoment { mean_x, mean_p, var_x, var_p, sym_cov, commutator, x3 };

/// Closed-form block moments for iid product states:
///   mean_X = <x>, var_X = var_x/n, sym_cov = cov_c/n,
///   commutator = comm_m/n, X3 by multinomial expansion.
/// Works from scalars only, so synthetic moment sets are accepted.
double exact_block_moment(const MomentSet& ms, std::int64_t n, BlockMoment which);

struct RateReport {
  std::vector<std::int64_t> n_values;
  std::vector<double> sup_errors;
  std::vector<double> kl_errors;
  double fitted_exponent = 0.0;
  double fit_residual = 0.0;
  /// All errors at the numerical-precision floor (Gaussian input): the
  /// state is a fixed point of blocking and no rate fit is meaningful.
  bool exact_fixed_point = false;
};

/// Least-squares slope of log(sup error) against log(n).
RateReport fit_convergence_rate(const WaveFunction& psi,
                                std::span<const std::int64_t> n_values);

/// Assemble a RateReport from per-n errors computed elsewhere (e.g. by a
/// caller running the convolutions concurrently). Flags the fixed point and
/// fits the log-log slope exactly as fit_convergence_rate does.
RateReport summarize_rate(std::vector<std::int64_t> n_values,
                          std::vector<double> sup_errors, std::vector<double> kl_errors);

/// Quadrature of X^mx P^mp against the exact signed distribution P_im,
/// evaluated from its characteristic function
///   chi(w,l) = -2 exp(-(w^2 var_x + l^2 var_p + 2 w l cov_c)/2n)
///               * sin(w l comm_m / 2n)
/// on a 2D grid (inverse FFT, then trapezoid). Well defined for every
/// state, including those where the printed pair is not normalizable.
/// grid_points must be a multiple of 4.
double im_moment_quadrature(const MomentSet& ms, std::int64_t n, int mx, int mp,
                            std::size_t grid_points = 512, double extent_sigmas = 16.0);

}  // namespace qclt

#endif
