// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/core.hpp"
#include "tqsim/coupling.hpp"

#include <cmath>
#include <string>

namespace tqsim {

bool FourVector::is_finite() const {
  return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

Coupling::Coupling(double g) : g_(g) {
  if (!(g >= 0.0 && g <= 1.0)) {
    throw InvalidParameter("coupling.g must lie in [0,1]");
  }
}

std::size_t weighted_select(std::span<const double> weights, RandomStream& rng) {
  double total = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidWeight("weight " + std::to_string(i) + " is negative or not finite");
    }
    if (w > 0.0) last_positive = i;
    total += w;
  }
  if (last_positive == weights.size()) {
    throw NoCompetingTransactions("no weight is positive");
  }

  const double target = rng.uniform() * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < last_positive; ++i) {
    cumulative += weights[i];
    if (weights[i] > 0.0 && target < cumulative) return i;
  }
  // Rounding in the running sum can leave target just past the final
  // partial sum; the remaining mass belongs to the last positive entry.
  return last_positive;
}

}  // namespace tqsim
