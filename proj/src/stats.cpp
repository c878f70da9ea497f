// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/stats.hpp"

#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <utility>

#include "tqsim/errors.hpp"

namespace tqsim::stats {
namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Vector3 = std::array<double, 3>;

// Gaussian elimination with partial pivoting.
Vector3 solve3(Matrix3 a, Vector3 b) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) throw InvalidParameter("singular sinusoid fit");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vector3 x{};
  for (int r = 2; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < 3; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities, double min_expected) {
  if (observed.size() != probabilities.size()) {
    throw InvalidParameter("observed and expected bins differ in size");
  }
  double n = 0.0;
  for (auto o : observed) n += static_cast<double>(o);
  if (n == 0.0) throw InvalidParameter("no observations");

  ChiSquareResult result;
  double pooled_observed = 0.0;
  double pooled_expected = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probabilities[i];
    const double o = static_cast<double>(observed[i]);
    if (expected < min_expected) {
      pooled_observed += o;
      pooled_expected += expected;
      continue;
    }
    result.statistic += (o - expected) * (o - expected) / expected;
    ++result.bins;
  }
  if (pooled_expected > 0.0) {
    result.statistic += (pooled_observed - pooled_expected) *
                        (pooled_observed - pooled_expected) / pooled_expected;
    ++result.bins;
  }
  result.dof = result.bins > 1 ? result.bins - 1 : 0;
  if (result.dof > 0) {
    const boost::math::chi_squared dist(static_cast<double>(result.dof));
    result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  }
  return result;
}

Moments moments(std::span<const double> samples) {
  Moments m;
  m.count = samples.size();
  if (samples.empty()) return m;
  // Welford.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double x : samples) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
  }
  m.mean = mean;
  m.variance = k > 1 ? m2 / static_cast<double>(k - 1) : 0.0;
  return m;
}

SinusoidFit fit_sinusoid(std::span<const double> theta, std::span<const double> y) {
  if (theta.size() != y.size() || theta.size() < 4) {
    throw InvalidParameter("sinusoid fit needs >= 4 paired samples");
  }
  Matrix3 ata{};
  Vector3 aty{};
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Vector3 row{1.0, std::cos(theta[i]), std::sin(theta[i])};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) ata[r][c] += row[r] * row[c];
      aty[r] += row[r] * y[i];
    }
  }
  const Vector3 coef = solve3(ata, aty);

  double rss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double fitted = coef[0] + coef[1] * std::cos(theta[i]) + coef[2] * std::sin(theta[i]);
    rss += (y[i] - fitted) * (y[i] - fitted);
  }
  return {std::hypot(coef[1], coef[2]), std::atan2(coef[2], coef[1]), coef[0],
          rss / static_cast<double>(y.size() - 3)};
}

}  // namespace tqsim::stats
