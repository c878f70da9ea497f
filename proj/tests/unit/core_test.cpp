// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/core.hpp"

#include <gtest/gtest.h>

#include <array>
#include <numbers>
#include <vector>

#include "testing.hpp"
#include "tqsim/coupling.hpp"
#include "tqsim/stats.hpp"

namespace tqsim {
namespace {

TEST(MinkowskiDot, Examples) {
  EXPECT_EQ(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}), 1.0);
  EXPECT_EQ(minkowski_dot({0, 1, 0, 0}, {0, 1, 0, 0}), -1.0);
  EXPECT_EQ(minkowski_dot({2, 0, 0, 0}, {2, 0, 0, 0}), 4.0);
  EXPECT_EQ(minkowski_dot({1, 2, 3, 4}, {5, 6, 7, 8}), 5.0 - 12.0 - 21.0 - 32.0);
}

TEST(MinkowskiDot, SymmetricAndBilinear) {
  RandomStream rng(7);
  auto draw = [&] {
    return FourVector{rng.uniform() - 0.5, rng.uniform() - 0.5, rng.uniform() - 0.5,
                      rng.uniform() - 0.5};
  };
  for (int i = 0; i < 1000; ++i) {
    const FourVector a = draw(), b = draw(), c = draw();
    const double s = 4.0 * rng.uniform() - 2.0;
    EXPECT_EQ(minkowski_dot(a, b), minkowski_dot(b, a));
    EXPECT_NEAR(minkowski_dot(s * a + b, c), s * minkowski_dot(a, c) + minkowski_dot(b, c),
                1e-14);
  }
}

TEST(BornWeight, Examples) {
  EXPECT_EQ(born_weight({1, 0}), 1.0);
  EXPECT_EQ(born_weight({0, 1}), 1.0);
  EXPECT_EQ(born_weight({3, 4}), 25.0);
}

TEST(BornWeight, NonnegativeAndPhaseInvariant) {
  RandomStream rng(11);
  for (int i = 0; i < 1000; ++i) {
    const ComplexAmplitude m{10.0 * rng.normal(), 10.0 * rng.normal()};
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    EXPECT_GE(born_weight(m), 0.0);
    EXPECT_NEAR(born_weight(std::polar(1.0, theta) * m), born_weight(m),
                1e-13 * born_weight(m));
  }
}

TEST(Coupling, RejectsOutOfRange) {
  EXPECT_NO_THROW(Coupling(0.0));
  EXPECT_NO_THROW(Coupling(1.0));
  EXPECT_THROW(Coupling(1.5), InvalidParameter);
  EXPECT_THROW(Coupling(-0.1), InvalidParameter);
  EXPECT_THROW(Coupling(std::nan("")), InvalidParameter);
}

TEST(WeightedSelect, CertainOutcome) {
  RandomStream rng(1);
  const std::array<double, 3> w{1, 0, 0};
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(weighted_select(w, rng), 0u);
  const std::array<double, 3> last{0, 0, 2};
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(weighted_select(last, rng), 2u);
}

TEST(WeightedSelect, Errors) {
  RandomStream rng(1);
  EXPECT_THROW(weighted_select(std::vector<double>{}, rng), NoCompetingTransactions);
  EXPECT_THROW(weighted_select(std::vector<double>{0, 0}, rng), NoCompetingTransactions);
  EXPECT_THROW(weighted_select(std::vector<double>{1, -1}, rng), InvalidWeight);
  EXPECT_THROW(weighted_select(std::vector<double>{1, INFINITY}, rng), InvalidWeight);
  EXPECT_THROW(weighted_select(std::vector<double>{std::nan(""), 1}, rng), InvalidWeight);
}

std::vector<std::uint64_t> tally(std::span<const double> w, std::uint64_t draws,
                                 std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<std::uint64_t> counts(w.size(), 0);
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[weighted_select(w, rng)];
  return counts;
}

TEST(WeightedSelect, EqualWeightsFrequencies) {
  const std::array<double, 2> w{1, 1};
  const auto counts = tally(w, 100000, 2024);
  EXPECT_TRUE(testing::frequency_matches(counts[0], 100000, 0.5));
  EXPECT_TRUE(testing::frequency_matches(counts[1], 100000, 0.5));
}

TEST(WeightedSelect, UnequalWeightsFrequencies) {
  const std::array<double, 2> w{1, 3};
  const auto counts = tally(w, 100000, 2025);
  EXPECT_TRUE(testing::frequency_matches(counts[0], 100000, 0.25));
  EXPECT_TRUE(testing::frequency_matches(counts[1], 100000, 0.75));
  const std::array<double, 2> p{0.25, 0.75};
  EXPECT_GT(stats::chi_square_gof(counts, p).p_value, 0.001);
}

TEST(WeightedSelect, BitReproducibleForFixedSeed) {
  const std::array<double, 4> w{0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(tally(w, 5000, 99), tally(w, 5000, 99));
}

TEST(WeightedSelect, ScaleInvariantDistribution) {
  const std::array<double, 4> w{1, 2, 3, 4};
  // Power-of-two scaling is exact in binary floating point, so even the
  // individual draws coincide.
  const std::array<double, 4> doubled{2, 4, 6, 8};
  EXPECT_EQ(tally(w, 5000, 5), tally(doubled, 5000, 5));

  const std::array<double, 4> scaled{0.37, 0.74, 1.11, 1.48};
  const auto counts = tally(scaled, 100000, 6);
  const std::array<double, 4> p{0.1, 0.2, 0.3, 0.4};
  EXPECT_GT(stats::chi_square_gof(counts, p).p_value, 0.001);
}

TEST(WeightedSelect, NeverPicksZeroWeight) {
  const std::array<double, 5> w{0, 1, 0, 1, 0};
  const auto counts = tally(w, 20000, 8);
  EXPECT_EQ(counts[0] + counts[2] + counts[4], 0u);
}

}  // namespace
}  // namespace tqsim
