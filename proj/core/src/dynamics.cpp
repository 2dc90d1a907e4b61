#include "qclt/dynamics.hpp"

#include <cmath>
#include <limits>

namespace qclt {

MomentSet evolve_moments(const SystemSpec& system, const MomentSet& ms0, double t) {
  system.validate();
  ms0.require_phase_space("evolve_moments");

  const double m = ms0.units.mass;
  MomentSet ms = ms0;
  ms.x3 = std::numeric_limits<double>::quiet_NaN();
  ms.validity_ratio = std::numeric_limits<double>::quiet_NaN();

  switch (system.kind) {
    case SystemKind::free_particle:
    case SystemKind::constant_force: {
      ms.mean_x = ms0.mean_x + ms0.mean_p * t / m;
      ms.var_x = ms0.var_x + t * t * ms0.var_p / (m * m) + 2.0 * t * ms0.cov_c / m;
      ms.cov_c = ms0.cov_c + t * ms0.var_p / m;
      if (system.kind == SystemKind::constant_force) {
        ms.mean_x += system.a * t * t / (2.0 * m);
        ms.mean_p = ms0.mean_p + system.a * t;
      }
      return ms;
    }
    case SystemKind::oscillator: {
      const double w = system.omega;
      const double c = std::cos(w * t);
      const double s = std::sin(w * t);
      ms.mean_x = ms0.mean_x * c + ms0.mean_p * s / (m * w);
      ms.mean_p = ms0.mean_p * c - m * w * ms0.mean_x * s;
      ms.var_x = c * c * ms0.var_x + s * s * ms0.var_p / (m * m * w * w) +
                 2.0 * s * c * ms0.cov_c / (m * w);
      ms.var_p = c * c * ms0.var_p + m * m * w * w * s * s * ms0.var_x -
                 2.0 * m * w * s * c * ms0.cov_c;
      ms.cov_c = std::cos(2.0 * w * t) * ms0.cov_c +
                 s * c * (ms0.var_p / (m * w) - m * w * ms0.var_x);
      return ms;
    }
  }
  throw std::invalid_argument("evolve_moments: unknown system kind");
}

MomentSet reversed(const MomentSet& ms) {
  MomentSet r = ms;
  r.mean_p = -ms.mean_p;
  r.cov_c = -ms.cov_c;
  return r;
}

PropagatorCheck verify_against_propagator(const SystemSpec& system,
                                          const WaveFunction& psi0, double t,
                                          std::size_t n_steps) {
  const MomentSet ms0 = extract_moments(psi0);
  PropagatorCheck check;
  check.closed = evolve_moments(system, ms0, t);
  const WaveFunction psi_t = propagate(psi0, system, t, n_steps);
  check.propagated = extract_moments(psi_t);

  check.diff_mean_x = std::abs(check.closed.mean_x - check.propagated.mean_x);
  check.diff_mean_p = std::abs(check.closed.mean_p - check.propagated.mean_p);
  check.diff_var_x = std::abs(check.closed.var_x - check.propagated.var_x);
  check.diff_var_p = std::abs(check.closed.var_p - check.propagated.var_p);
  check.diff_cov_c = std::abs(check.closed.cov_c - check.propagated.cov_c);
  check.max_abs_diff = std::max({check.diff_mean_x, check.diff_mean_p, check.diff_var_x,
                                 check.diff_var_p, check.diff_cov_c});
  return check;
}

}  // namespace qclt
