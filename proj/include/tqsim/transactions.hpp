// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tqsim/core.hpp"
#include "tqsim/coupling.hpp"

// Stochastic transaction engine.
//
// An emitter sends an offer wave (OW) with one amplitude per potential
// absorber. Each absorber answers, or not, with a confirmation wave (CW)
// whose amplitude is the complex conjugate of the offer component it
// received. In the relativistic regime an absorber with coupling g answers
// with probability g^2, independently of the others; in the nonrelativistic
// regime every addressed absorber answers. Each (OW, CW) pair is an
// incipient transaction weighted by offer * confirmation = |offer|^2, and
// exactly one of the competitors is actualized, with probability
// proportional to its weight. An OW with no confirmations produces no event.
namespace tqsim {

struct AbsorberId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(const AbsorberId&, const AbsorberId&) = default;
};

struct PotentialAbsorber {
  AbsorberId id;
  Coupling coupling{1.0};
  std::string label;
};

// Absorbers kept sorted by id. Ids are unique.
class AbsorberSet {
 public:
  // Throws InvalidParameter on duplicate ids.
  explicit AbsorberSet(std::vector<PotentialAbsorber> absorbers);

  // `count` absorbers with ids 0..count-1 sharing one coupling.
  static AbsorberSet uniform(std::size_t count, Coupling coupling);

  std::span<const PotentialAbsorber> absorbers() const { return absorbers_; }
  std::size_t size() const { return absorbers_.size(); }
  const PotentialAbsorber* find(AbsorberId id) const;

 private:
  std::vector<PotentialAbsorber> absorbers_;
};

struct OfferComponent {
  AbsorberId absorber;
  ComplexAmplitude amplitude;
};

// Offer components sorted by absorber id.
class OfferWave {
 public:
  // Throws InvalidParameter when empty, on a duplicate id or on a
  // non-finite amplitude.
  explicit OfferWave(std::vector<OfferComponent> components);

  std::span<const OfferComponent> components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  const OfferComponent* find(AbsorberId id) const;

 private:
  std::vector<OfferComponent> components_;
};

class ConfirmationWave {
 public:
  static ConfirmationWave respond_to(const OfferComponent& offer) {
    return ConfirmationWave(offer.absorber, std::conj(offer.amplitude));
  }

  AbsorberId absorber() const { return absorber_; }
  ComplexAmplitude amplitude() const { return amplitude_; }

 private:
  ConfirmationWave(AbsorberId absorber, ComplexAmplitude amplitude)
      : absorber_(absorber), amplitude_(amplitude) {}

  AbsorberId absorber_;
  ComplexAmplitude amplitude_;
};

struct IncipientTransaction {
  AbsorberId absorber;
  double weight = 0.0;
};

enum class Regime { Relativistic, Nonrelativistic };

// g^2.
double confirmation_probability(const Coupling& c);

// N micro-absorbers sharing one coupling. N is held as a double so that
// macroscopic counts (~1e23) are representable; it must be integral and >= 1.
class DetectorArray {
 public:
  DetectorArray(double count, Coupling coupling);

  double count() const { return count_; }
  const Coupling& coupling() const { return coupling_; }

 private:
  double count_;
  Coupling coupling_;
};

// log of the probability that none of the N absorbers confirms,
// N log1p(-g^2). -inf when g = 1.
double detector_log_complement(const DetectorArray& d);

// 1 - (1 - g^2)^N, evaluated as -expm1(N log1p(-g^2)).
double detector_response_probability(const DetectorArray& d);

// CWs for every offer component whose absorber confirms, sorted by absorber
// id. Throws MissingComponent if an offer component addresses an absorber
// that is not in the set. Absorbers with g in {0, 1} consume no randomness.
std::vector<ConfirmationWave> sample_confirmations(const OfferWave& ow,
                                                   const AbsorberSet& absorbers, Regime regime,
                                                   RandomStream& rng);

// Number of confirmations only; same draws as sample_confirmations.
std::size_t count_confirmations(const OfferWave& ow, const AbsorberSet& absorbers,
                                Regime regime, RandomStream& rng);

// One incipient transaction per CW, sorted by absorber id, weighted by the
// product of the offer component and the confirmation amplitude. Throws
// MissingComponent when a CW answers no component of `ow`, or answers it
// with the wrong amplitude.
std::vector<IncipientTransaction> form_incipient_transactions(
    const OfferWave& ow, std::span<const ConfirmationWave> cws);

// The single winner among the competitors. Throws NoCompetingTransactions
// when empty or every weight is zero.
AbsorberId actualize(std::span<const IncipientTransaction> incipients, RandomStream& rng);

// Offer, confirmation, and actualization in sequence. nullopt when no
// absorber confirmed (or every confirmed component has zero amplitude).
std::optional<AbsorberId> run_transaction(const OfferWave& ow, const AbsorberSet& absorbers,
                                          Regime regime, RandomStream& rng);

}  // namespace tqsim
