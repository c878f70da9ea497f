// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tqsim::cli {

enum class Experiment { TwoSlit, Scatter, Detector, Coherent, PropagatorCheck };
enum class OutputFormat { Csv, Json };

std::optional<Experiment> parse_experiment(std::string_view name);
std::string_view to_string(Experiment e);
std::optional<OutputFormat> parse_format(std::string_view name);

// One experiment run. `params` holds the parsed config file object; the
// top-level keys seed, trials and format are read from it unless the
// matching override is set (command-line values win).
struct ExperimentConfig {
  Experiment experiment = Experiment::TwoSlit;
  nlohmann::json params = nlohmann::json::object();

  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  std::optional<std::string> format;
  std::optional<std::string> out;
  unsigned threads = 0;  // 0: sequential single-stream mode
};

struct Violation {
  std::string field;
  std::string rule;
};

std::string format_violation(const Violation& v);

// Reads a JSON config file. Throws tqsim::InvalidParameter when the file
// cannot be read or is not a JSON object.
nlohmann::json load_config_file(const std::string& path);

// Empty iff run() would accept the config.
std::vector<Violation> validate(const ExperimentConfig& config);

}  // namespace tqsim::cli
