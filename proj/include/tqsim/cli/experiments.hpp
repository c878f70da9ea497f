// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "tqsim/cli/config.hpp"

namespace tqsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitDomainError = 3;

// Validates and runs one experiment. Results go to `out` unless
// config.out names a file; diagnostics go to `err`. Returns the process
// exit status: 0 on success, 2 for an invalid config, 3 for a domain error
// raised while running (e.g. an on-shell propagator pole).
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tqsim::cli
