#ifndef QCLT_ERRORS_HPP
#define QCLT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qclt {

/// Numerical failure: non-normalizable state, boundary leak, aliasing,
/// degenerate covariance. Maps to CLI exit code 1.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user configuration (missing keys, wrong types, out-of-range values).
/// Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qclt

#endif
