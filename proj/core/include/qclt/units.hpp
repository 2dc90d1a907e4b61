#ifndef QCLT_UNITS_HPP
#define QCLT_UNITS_HPP

#include "qclt/errors.hpp"

namespace qclt {

/// Physical constants of the problem. Natural units (all = 1) by default.
struct Units {
  double hbar = 1.0;
  double mass = 1.0;
  double k_b = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(k_b > 0.0)) {
      throw ConfigError("units: hbar, mass and k_b must be strictly positive");
    }
  }
};

}  // namespace qclt

#endif
