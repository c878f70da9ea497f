// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

// tqsim <experiment> [--config PATH] [--seed N] [--trials N] [--out PATH]
//       [--format csv|json] [--threads N] [--validate]

#include <CLI11.hpp>

#include <iostream>

#include "tqsim/cli/config.hpp"
#include "tqsim/cli/experiments.hpp"
#include "tqsim/errors.hpp"

int main(int argc, char** argv) {
  using namespace tqsim::cli;

  CLI::App app{"Transaction-model quantum event simulator"};
  std::string experiment_name;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  std::optional<std::string> out;
  std::optional<std::string> format;
  unsigned threads = 0;
  bool validate_only = false;

  app.add_option("experiment", experiment_name,
                 "two-slit | scatter | detector | coherent | propagator-check")
      ->required();
  app.add_option("--config", config_path, "JSON experiment config");
  app.add_option("--seed", seed, "random seed (overrides config)");
  app.add_option("--trials", trials, "number of trials (overrides config)");
  app.add_option("--out", out, "output path (default: standard output)");
  app.add_option("--format", format, "csv or json (overrides config)");
  app.add_option("--threads", threads,
                 "worker threads for two-slit; 0 runs the sequential single-stream mode");
  app.add_flag("--validate", validate_only, "check the config and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  const auto experiment = parse_experiment(experiment_name);
  if (!experiment) {
    std::cerr << "unknown experiment: " << experiment_name << "\n";
    return kExitInvalidConfig;
  }

  ExperimentConfig config;
  config.experiment = *experiment;
  config.seed = seed;
  config.trials = trials;
  config.format = format;
  config.out = out;
  config.threads = threads;
  if (!config_path.empty()) {
    try {
      config.params = load_config_file(config_path);
    } catch (const tqsim::Error& e) {
      std::cerr << "invalid config: " << e.what() << "\n";
      return kExitInvalidConfig;
    }
  }

  if (validate_only) {
    const auto violations = validate(config);
    for (const auto& v : violations) std::cerr << "invalid config: " << format_violation(v) << "\n";
    return violations.empty() ? kExitOk : kExitInvalidConfig;
  }
  return run(config, std::cout, std::cerr);
}
