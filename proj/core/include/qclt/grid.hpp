#ifndef QCLT_GRID_HPP
#define QCLT_GRID_HPP

#include <cmath>
#include <cstddef>

#include "qclt/errors.hpp"

namespace qclt {

/// Uniform periodic position grid. n_points must be a power of two (>= 64)
/// so every transform stays radix-2.
struct GridSpec {
  double x_min = -12.0;
  double x_max = 12.0;
  std::size_t n_points = 1024;

  double length() const { return x_max - x_min; }
  double dx() const { return length() / static_cast<double>(n_points); }
  double point(std::size_t j) const { return x_min + static_cast<double>(j) * dx(); }
  /// Momentum-space spacing for wavenumber kappa; p = hbar * kappa.
  double dk() const { return 2.0 * M_PI / length(); }

  void validate() const {
    if (!(x_max > x_min)) throw ConfigError("grid: x_max must exceed x_min");
    if (n_points < 64 || (n_points & (n_points - 1)) != 0) {
      throw ConfigError("grid: n_points must be a power of two >= 64");
    }
    if (!(dx() > 0.0)) throw ConfigError("grid: degenerate spacing");
  }
};

/// Sampled axis for densities produced by convolution; unlike GridSpec the
/// point count is arbitrary and the interval is closed.
struct Axis {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t n = 0;

  double point(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
};

}  // namespace qclt

#endif
