#ifndef QCLT_NUMERICS_HPP
#define QCLT_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qclt {

using cplx = std::complex<double>;

/// Deterministic pairwise (cascade) summation. Result is independent of
/// thread count because each reduction is a fixed binary tree.
double pairwise_sum(std::span<const double> values);
cplx pairwise_sum(std::span<const cplx> values);

/// Trapezoid rule on a closed uniformly sampled interval.
double trapezoid(std::span<const double> values, double dx);

/// Quadrature of samples on a periodic grid (all weights equal dx). For
/// states contained well inside the box this coincides with the trapezoid
/// rule and is spectrally accurate.
double periodic_quadrature(std::span<const double> values, double dx);

/// Least-squares line y = slope*x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Tensor-product trapezoid quadrature of f over the box
/// [cx - hx, cx + hx] x [cy - hy, cy + hy] with m points per axis.
double quad2d(const std::function<double(double, double)>& f, double cx, double cy,
              double hx, double hy, std::size_t m);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace qclt

#endif
