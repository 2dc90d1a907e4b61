#ifndef QCLT_CLI_OUTPUT_HPP
#define QCLT_CLI_OUTPUT_HPP

#include <string>

namespace qclt::cli {

enum class OutputFormat { csv, json };

/// Doubles rendered with 17 significant digits: round-trip exact and
/// byte-stable across runs.
std::string format_double(double v);

/// Write to stdout when path is empty; otherwise write to a temporary file
/// next to the target and atomically rename, so failures never leave a
/// partial output file.
void write_output(const std::string& path, const std::string& content);

}  // namespace qclt::cli

#endif
