#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qclt/commands.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  unsigned threads = 1;
};

void add_common(CLI::App* sub, Options& opts) {
  sub->add_option("--config", opts.config_path, "JSON run configuration")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", opts.out_path,
                  "Output file (written atomically); stdout when omitted");
  sub->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", opts.threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
}

unsigned resolve_threads(unsigned flag_value) {
  if (const char* env = std::getenv("QCLT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring invalid QCLT_THREADS='" << env << "'\n";
  }
  return flag_value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse-grained quantum CLT distributions, oracles and entropies"};
  app.require_subcommand(1);

  Options opts;
  using Runner = std::string (*)(const qclt::cli::CommandContext&);
  Runner runner = nullptr;

  const std::pair<const char*, Runner> commands[] = {
      {"moments", &qclt::cli::run_moments},   {"converge", &qclt::cli::run_converge},
      {"expect", &qclt::cli::run_expect},     {"entropy", &qclt::cli::run_entropy},
      {"evolve", &qclt::cli::run_evolve},     {"dist", &qclt::cli::run_dist}};
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, opts);
    sub->callback([&runner, fn = fn]() { runner = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    qclt::cli::CommandContext ctx;
    ctx.config = qclt::cli::load_config(opts.config_path);
    ctx.format = opts.format == "json" ? qclt::cli::OutputFormat::json
                                       : qclt::cli::OutputFormat::csv;
    ctx.threads = resolve_threads(opts.threads);
    const std::string content = runner(ctx);
    qclt::cli::write_output(opts.out_path, content);
    return 0;
  } catch (const qclt::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
