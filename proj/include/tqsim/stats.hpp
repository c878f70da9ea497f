// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Summary statistics used to check sampled results against analytic laws.
namespace tqsim::stats {

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  std::size_t bins = 0;  // after pooling
};

// Pearson goodness of fit of observed counts against probabilities that sum
// to 1. Bins whose expected count is below `min_expected` are pooled into
// one bin. Throws InvalidParameter on a size mismatch or an empty sample.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities,
                               double min_expected = 5.0);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  std::size_t count = 0;
};

Moments moments(std::span<const double> samples);

// Least-squares fit y ~ offset + a cos(theta) + b sin(theta).
struct SinusoidFit {
  double amplitude = 0.0;  // sqrt(a^2 + b^2)
  double phase = 0.0;      // atan2(b, a)
  double offset = 0.0;
  double residual_variance = 0.0;  // sum of squared residuals / (n - 3)
};

SinusoidFit fit_sinusoid(std::span<const double> theta, std::span<const double> y);

}  // namespace tqsim::stats
