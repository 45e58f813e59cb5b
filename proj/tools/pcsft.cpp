#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pcsft/experiments.hpp"

namespace {

using namespace pcsft::cli;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
};

using Command = CommandOutput (*)(const ExperimentConfig&, OutputFormat);

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

int run(const Options& opts, Command command) {
  ExperimentConfig cfg;
  try {
    cfg = opts.config.empty() ? parse_config(pcsft::io::json::object(), opts.seed) : load_config(opts.config, opts.seed);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  }
  const OutputFormat format = opts.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  CommandOutput result;
  try {
    result = command(cfg, format);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  } catch (const pcsft::io::NonFiniteOutput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  if (opts.out.empty()) {
    std::cout << result.body;
    if (result.summary) std::cerr << *result.summary;
  } else {
    write_file(opts.out, result.body);
    if (result.summary) write_file(opts.out + ".summary.json", *result.summary);
  }
  return result.passed ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian phase-space states, their flows and their quantum counterparts"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--config", opts.config, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--seed", opts.seed, "override the config seed");
  app.add_option("--out", opts.out, "output file (default stdout)");
  app.add_option("--format", opts.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  const std::pair<const char*, Command> commands[] = {
      {"verify", cmd_verify},
      {"correspondence", cmd_correspondence},
      {"scaling", cmd_scaling},
      {"dynamics", cmd_dynamics},
      {"ensemble", cmd_ensemble},
  };
  const std::map<std::string, std::string> help = {
      {"verify", "run the structural checks and report pass/fail per check"},
      {"correspondence", "classical and quantum averages of a variable"},
      {"scaling", "average discrepancy over a grid of h with a log-log slope"},
      {"dynamics", "evolve a point, a state and an observable average over time"},
      {"ensemble", "empirical covariance of an evolved ensemble against the exact one"},
  };
  Command selected = nullptr;
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->callback([&selected, fn = fn] { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kExitConfigError);
  }
  try {
    return run(opts, selected);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
