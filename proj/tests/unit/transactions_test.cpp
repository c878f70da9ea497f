// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/transactions.hpp"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cfloat>
#include <fstream>
#include <sstream>

#include "testing.hpp"
#include "tqsim/stats.hpp"

namespace tqsim {
namespace {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

// 1 - (1 - g^2)^N in 50-digit decimal arithmetic, straight from the product
// formula (no logarithms).
double response_oracle(double g, unsigned long long n) {
  const Decimal50 gd(g);
  const Decimal50 miss = Decimal50(1) - gd * gd;
  return static_cast<double>(Decimal50(1) - boost::multiprecision::pow(miss, n));
}

OfferWave uniform_offer(std::size_t n) {
  std::vector<OfferComponent> components;
  for (std::size_t i = 0; i < n; ++i) {
    components.push_back({AbsorberId{i}, 1.0 / std::sqrt(static_cast<double>(n))});
  }
  return OfferWave(std::move(components));
}

TEST(ConfirmationProbability, Examples) {
  // 0.007^2 rounds to one ulp above the double nearest 4.9e-5.
  const double p = confirmation_probability(Coupling(0.007));
  EXPECT_EQ(p, 0.007 * 0.007);
  EXPECT_LE(std::abs(p - 4.9e-5), 4.9e-5 * DBL_EPSILON);
  EXPECT_EQ(confirmation_probability(Coupling(0.0)), 0.0);
  EXPECT_EQ(confirmation_probability(Coupling(1.0)), 1.0);
}

TEST(DetectorResponse, MacroscopicSampleIsCertain) {
  const DetectorArray metal(1e23, Coupling(0.007));
  EXPECT_EQ(detector_response_probability(metal), 1.0);
  EXPECT_NEAR(detector_log_complement(metal), -4.9e18, 1e-3 * 4.9e18);
}

TEST(DetectorResponse, SingleAbsorber) {
  for (double g : {0.0, 0.007, 0.3, 1.0}) {
    EXPECT_NEAR(detector_response_probability(DetectorArray(1, Coupling(g))), g * g,
                4 * DBL_EPSILON * g * g);
  }
}

TEST(DetectorResponse, MatchesHighPrecisionOracle) {
  const double p = detector_response_probability(DetectorArray(20000, Coupling(0.007)));
  const double oracle = response_oracle(0.007, 20000);
  EXPECT_NEAR(oracle, 0.62469791255427531, 1e-16);
  EXPECT_NEAR(p, oracle, 1e-12 * oracle);

  for (unsigned long long n : {1ULL, 7ULL, 1000ULL, 123457ULL, 1000000ULL}) {
    for (double g : {0.001, 0.007, 0.1, 0.5, 0.99}) {
      const double got = detector_response_probability(DetectorArray(double(n), Coupling(g)));
      const double want = response_oracle(g, n);
      EXPECT_NEAR(got, want, 1e-12 * want) << "N=" << n << " g=" << g;
    }
  }
}

TEST(DetectorResponse, MonotoneInCountAndCoupling) {
  double previous = 0.0;
  for (double n = 1; n <= 1e12; n *= 3) {
    const double p = detector_response_probability(DetectorArray(std::floor(n), Coupling(0.01)));
    EXPECT_GE(p, previous);
    previous = p;
  }
  previous = 0.0;
  for (double g = 0.0; g <= 1.0; g += 0.01) {
    const double p = detector_response_probability(DetectorArray(5000, Coupling(g)));
    EXPECT_GE(p, previous);
    previous = p;
  }
}

TEST(DetectorArray, RejectsBadCounts) {
  EXPECT_THROW(DetectorArray(0, Coupling(0.1)), InvalidParameter);
  EXPECT_THROW(DetectorArray(2.5, Coupling(0.1)), InvalidParameter);
  EXPECT_THROW(DetectorArray(INFINITY, Coupling(0.1)), InvalidParameter);
}

TEST(OfferWave, Validation) {
  EXPECT_THROW(OfferWave({}), InvalidParameter);
  EXPECT_THROW(OfferWave({{AbsorberId{1}, 1.0}, {AbsorberId{1}, 2.0}}), InvalidParameter);
  EXPECT_THROW(OfferWave({{AbsorberId{1}, ComplexAmplitude(NAN, 0)}}), InvalidParameter);
  const OfferWave ow({{AbsorberId{5}, 1.0}, {AbsorberId{2}, 2.0}});
  EXPECT_EQ(ow.components()[0].absorber, AbsorberId{2});
  EXPECT_EQ(ow.find(AbsorberId{5})->amplitude, ComplexAmplitude(1.0));
  EXPECT_EQ(ow.find(AbsorberId{3}), nullptr);
}

TEST(AbsorberSet, RejectsDuplicates) {
  EXPECT_THROW(AbsorberSet({{AbsorberId{1}, Coupling(0.1), "a"}, {AbsorberId{1}, Coupling(0.2), "b"}}),
               InvalidParameter);
}

TEST(SampleConfirmations, NonrelativisticAlwaysConfirms) {
  const OfferWave ow({{AbsorberId{0}, {1, 2}}, {AbsorberId{1}, {0, 1}}, {AbsorberId{2}, 0.5}});
  const auto absorbers = AbsorberSet::uniform(3, Coupling(0.0));
  RandomStream rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cws = sample_confirmations(ow, absorbers, Regime::Nonrelativistic, rng);
    ASSERT_EQ(cws.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(cws[i].absorber(), ow.components()[i].absorber);
      EXPECT_EQ(cws[i].amplitude(), std::conj(ow.components()[i].amplitude));
    }
  }
}

TEST(SampleConfirmations, ZeroCouplingNeverConfirms) {
  const auto ow = uniform_offer(50);
  const auto absorbers = AbsorberSet::uniform(50, Coupling(0.0));
  RandomStream rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_TRUE(sample_confirmations(ow, absorbers, Regime::Relativistic, rng).empty());
    EXPECT_EQ(run_transaction(ow, absorbers, Regime::Relativistic, rng), std::nullopt);
  }
}

TEST(SampleConfirmations, UnitCouplingIsTheCertaintyRegime) {
  const auto ow = uniform_offer(20);
  const auto absorbers = AbsorberSet::uniform(20, Coupling(1.0));
  RandomStream rng(3);
  EXPECT_EQ(sample_confirmations(ow, absorbers, Regime::Relativistic, rng).size(), 20u);
}

TEST(SampleConfirmations, UnaddressedAbsorberIsMissing) {
  const OfferWave ow({{AbsorberId{0}, 1.0}, {AbsorberId{7}, 1.0}});
  const auto absorbers = AbsorberSet::uniform(3, Coupling(1.0));
  RandomStream rng(4);
  EXPECT_THROW(sample_confirmations(ow, absorbers, Regime::Relativistic, rng), MissingComponent);
  EXPECT_THROW(sample_confirmations(ow, absorbers, Regime::Nonrelativistic, rng),
               MissingComponent);
}

TEST(SampleConfirmations, AbsorbersOutsideTheOfferStaySilent) {
  const OfferWave ow({{AbsorberId{1}, 1.0}});
  const auto absorbers = AbsorberSet::uniform(3, Coupling(1.0));
  RandomStream rng(5);
  const auto cws = sample_confirmations(ow, absorbers, Regime::Relativistic, rng);
  ASSERT_EQ(cws.size(), 1u);
  EXPECT_EQ(cws[0].absorber(), AbsorberId{1});
}

TEST(SampleConfirmations, BinomialCounts) {
  constexpr std::size_t kAbsorbers = 10000;
  constexpr int kTrials = 2000;
  const auto ow = uniform_offer(kAbsorbers);
  const auto absorbers = AbsorberSet::uniform(kAbsorbers, Coupling(0.1));
  RandomStream rng(6);
  std::vector<double> counts(kTrials);
  for (auto& c : counts) {
    c = static_cast<double>(sample_confirmations(ow, absorbers, Regime::Relativistic, rng).size());
  }
  const auto m = stats::moments(counts);
  const double mean = kAbsorbers * 0.01;
  const double var = mean * 0.99;
  EXPECT_TRUE(testing::within_sigmas(m.mean, mean, std::sqrt(var / kTrials)));
  EXPECT_TRUE(testing::within_sigmas(m.variance, var, var * std::sqrt(2.0 / (kTrials - 1))));
}

TEST(SampleConfirmations, HeterogeneousCouplings) {
  const OfferWave ow({{AbsorberId{0}, 1.0}, {AbsorberId{1}, 1.0}});
  const AbsorberSet absorbers({{AbsorberId{0}, Coupling(std::sqrt(0.2)), "weak"},
                               {AbsorberId{1}, Coupling(std::sqrt(0.8)), "strong"}});
  RandomStream rng(7);
  std::uint64_t hits[2] = {0, 0};
  constexpr std::uint64_t kTrials = 50000;
  for (std::uint64_t t = 0; t < kTrials; ++t) {
    for (const auto& cw : sample_confirmations(ow, absorbers, Regime::Relativistic, rng)) {
      ++hits[cw.absorber().value];
    }
  }
  EXPECT_TRUE(testing::frequency_matches(hits[0], kTrials, 0.2));
  EXPECT_TRUE(testing::frequency_matches(hits[1], kTrials, 0.8));
}

TEST(SampleConfirmations, CountMatchesSampledSet) {
  const auto ow = uniform_offer(1000);
  const auto absorbers = AbsorberSet::uniform(1000, Coupling(0.3));
  RandomStream a(8), b(8);
  for (int t = 0; t < 50; ++t) {
    EXPECT_EQ(count_confirmations(ow, absorbers, Regime::Relativistic, a),
              sample_confirmations(ow, absorbers, Regime::Relativistic, b).size());
  }
}

TEST(FormIncipientTransactions, BornWeights) {
  const OfferWave ow({{AbsorberId{3}, ComplexAmplitude(3, 4) / 5.0}});
  const auto cw = ConfirmationWave::respond_to(ow.components()[0]);
  const auto incipients = form_incipient_transactions(ow, std::vector{cw});
  ASSERT_EQ(incipients.size(), 1u);
  EXPECT_EQ(incipients[0].absorber, AbsorberId{3});
  EXPECT_NEAR(incipients[0].weight, 1.0, 1e-15);

  EXPECT_TRUE(form_incipient_transactions(ow, {}).empty());
}

TEST(FormIncipientTransactions, EqualAmplitudesGiveEqualWeights) {
  const OfferWave ow({{AbsorberId{0}, {0.5, 0.5}}, {AbsorberId{1}, {-0.5, 0.5}}});
  std::vector<ConfirmationWave> cws{ConfirmationWave::respond_to(ow.components()[1]),
                                    ConfirmationWave::respond_to(ow.components()[0])};
  const auto incipients = form_incipient_transactions(ow, cws);
  ASSERT_EQ(incipients.size(), 2u);
  EXPECT_EQ(incipients[0].absorber, AbsorberId{0});  // sorted by id
  EXPECT_EQ(incipients[0].weight, incipients[1].weight);
  EXPECT_EQ(incipients[0].weight, 0.5);
}

TEST(FormIncipientTransactions, MismatchedConfirmation) {
  const OfferWave ow({{AbsorberId{0}, 1.0}});
  const OfferWave other({{AbsorberId{0}, 0.5}, {AbsorberId{9}, 1.0}});
  EXPECT_THROW(form_incipient_transactions(
                   ow, std::vector{ConfirmationWave::respond_to(other.components()[1])}),
               MissingComponent);
  EXPECT_THROW(form_incipient_transactions(
                   ow, std::vector{ConfirmationWave::respond_to(other.components()[0])}),
               MissingComponent);
}

std::vector<std::uint64_t> actualize_counts(std::vector<double> weights, std::uint64_t trials,
                                            std::uint64_t seed) {
  std::vector<IncipientTransaction> incipients;
  for (std::size_t i = 0; i < weights.size(); ++i) incipients.push_back({AbsorberId{i}, weights[i]});
  RandomStream rng(seed);
  std::vector<std::uint64_t> counts(weights.size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) ++counts[actualize(incipients, rng).value];
  return counts;
}

TEST(Actualize, SingleCompetitorAlwaysWins) {
  const std::vector<IncipientTransaction> one{{AbsorberId{42}, 0.3}};
  RandomStream rng(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(actualize(one, rng), AbsorberId{42});
}

TEST(Actualize, BornFrequencies) {
  const auto two = actualize_counts({1, 3}, 100000, 10);
  EXPECT_TRUE(testing::frequency_matches(two[0], 100000, 0.25));
  EXPECT_TRUE(testing::frequency_matches(two[1], 100000, 0.75));

  const auto four = actualize_counts({1, 1, 1, 1}, 100000, 11);
  for (auto c : four) EXPECT_TRUE(testing::frequency_matches(c, 100000, 0.25));
  const std::vector<double> uniform(4, 0.25);
  EXPECT_GT(stats::chi_square_gof(four, uniform).p_value, 0.001);
}

TEST(Actualize, NoCompetitors) {
  RandomStream rng(12);
  EXPECT_THROW(actualize({}, rng), NoCompetingTransactions);
  const std::vector<IncipientTransaction> zero{{AbsorberId{0}, 0.0}};
  EXPECT_THROW(actualize(zero, rng), NoCompetingTransactions);
}

TEST(RunTransaction, ExactlyOneWinnerFromTheConfirmedSet) {
  const auto ow = uniform_offer(100);
  const auto absorbers = AbsorberSet::uniform(100, Coupling(0.2));
  RandomStream rng(13);
  int events = 0;
  for (int t = 0; t < 1000; ++t) {
    RandomStream probe = rng;
    const auto cws = sample_confirmations(ow, absorbers, Regime::Relativistic, probe);
    const auto winner = run_transaction(ow, absorbers, Regime::Relativistic, rng);
    ASSERT_EQ(winner.has_value(), !cws.empty());
    if (winner) {
      ++events;
      EXPECT_TRUE(std::any_of(cws.begin(), cws.end(),
                              [&](const auto& cw) { return cw.absorber() == *winner; }));
    }
  }
  // P(no confirmation) = 0.96^100 ~ 1.7%.
  EXPECT_GT(events, 950);
}

// Scattering amplitudes are assembled from couplings and propagators only;
// the confirmation machinery lives downstream and is never reachable from an
// internal vertex.
TEST(EngineStructure, ScatteringNeverSamplesConfirmations) {
  for (const char* path : {TQSIM_SOURCE_DIR "/include/tqsim/scattering.hpp",
                           TQSIM_SOURCE_DIR "/src/scattering.cpp"}) {
    std::ifstream in(path);
    ASSERT_TRUE(in) << path;
    std::stringstream text;
    text << in.rdbuf();
    for (const char* forbidden : {"transactions.hpp", "sample_confirmations", "RandomStream"}) {
      EXPECT_EQ(text.str().find(forbidden), std::string::npos) << path << " uses " << forbidden;
    }
  }
}

}  // namespace
}  // namespace tqsim
