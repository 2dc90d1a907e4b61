#ifndef QCLT_CLI_CONFIG_HPP
#define QCLT_CLI_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <qclt/observables.hpp>
#include <qclt/propagator.hpp>
#include <qclt/statespec.hpp>

namespace qclt::cli {

struct TimeWindow {
  double t0 = 0.0;
  double t1 = 1.0;
  std::size_t samples = 2;
};

struct EvolveParams {
  double t = 1.0;
  std::optional<std::size_t> steps;
};

/// Everything a subcommand may need; each command validates the subset it
/// actually uses and reports missing keys by name.
struct RunConfig {
  std::optional<StateSpec> state;
  GridSpec grid{-12.0, 12.0, 1024};
  Units units{};
  std::optional<SystemSpec> system;
  std::vector<std::int64_t> n_list;
  std::optional<std::int64_t> n_single;
  std::optional<TimeWindow> time;
  std::optional<HermitianPolynomial> poly;
  std::optional<std::string> g;
  std::optional<EvolveParams> evolve;
};

/// Parse a JSON config file. Malformed JSON and badly typed or missing
/// values raise ConfigError naming the offending key.
RunConfig load_config(const std::string& path);

/// Parse from an in-memory JSON string (used by tests).
RunConfig parse_config(const std::string& text);

}  // namespace qclt::cli

#endif
