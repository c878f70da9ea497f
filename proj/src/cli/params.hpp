// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "tqsim/cli/config.hpp"
#include "tqsim/coherent.hpp"
#include "tqsim/scattering.hpp"
#include "tqsim/transactions.hpp"
#include "tqsim/two_slit.hpp"

// Typed parameter blocks, one per experiment. Parsing appends violations
// instead of throwing so that validate() can report every problem at once.
namespace tqsim::cli::detail {

using Violations = std::vector<Violation>;

struct CommonParams {
  std::uint64_t seed = 42;
  std::uint64_t trials = 1;
  OutputFormat format = OutputFormat::Csv;
};

struct TwoSlitParams {
  std::optional<TwoSlitGeometry> geometry;
  std::optional<TwoSlitGeometry> unmasked;  // for the fringe window when slit B is closed
  double screen_x = 3.0;
  ScreenModel screen;
};

struct ScatterParams {
  std::optional<ScatterProcess> process;
  Coupling coupling{1.0};
};

struct DetectorParams {
  std::optional<DetectorArray> array;
  bool simulate = false;
};

struct CoherentParams {
  ComplexAmplitude alpha{2.0, 0.0};
  std::size_t phases = 1000;
  double periods = 2.0;
};

struct PropagatorParams {
  double epsilon = 1e-9;
  double q_range = 3.0;
};

CommonParams parse_common(const ExperimentConfig& config, Violations& v);
TwoSlitParams parse_two_slit(const nlohmann::json& j, Violations& v);
ScatterParams parse_scatter(const nlohmann::json& j, Violations& v);
DetectorParams parse_detector(const nlohmann::json& j, Violations& v);
CoherentParams parse_coherent(const nlohmann::json& j, Violations& v);
PropagatorParams parse_propagator(const nlohmann::json& j, Violations& v);

// Parses every block for config.experiment, appending to v.
void parse_all(const ExperimentConfig& config, Violations& v);

}  // namespace tqsim::cli::detail
