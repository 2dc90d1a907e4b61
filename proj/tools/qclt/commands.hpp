#ifndef QCLT_CLI_COMMANDS_HPP
#define QCLT_CLI_COMMANDS_HPP

#include "qclt/config.hpp"
#include "qclt/output.hpp"

namespace qclt::cli {

struct CommandContext {
  RunConfig config;
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 1;
};

/// Each command renders its complete output (CSV or JSON) as a string; the
/// caller decides where it goes. Missing config keys raise ConfigError,
/// numerical problems raise NumericError.
std::string run_moments(const CommandContext& ctx);
std::string run_converge(const CommandContext& ctx);
std::string run_expect(const CommandContext& ctx);
std::string run_entropy(const CommandContext& ctx);
std::string run_evolve(const CommandContext& ctx);
std::string run_dist(const CommandContext& ctx);

}  // namespace qclt::cli

#endif
