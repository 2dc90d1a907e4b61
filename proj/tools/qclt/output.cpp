#include "qclt/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <qclt/errors.hpp>

namespace qclt::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw NumericError("output: cannot open '" + tmp.string() + "'");
    out << content;
    if (!out.good()) throw NumericError("output: write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw NumericError("output: rename to '" + path + "' failed: " + ec.message());
  }
}

}  // namespace qclt::cli
