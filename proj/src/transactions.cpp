// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/transactions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tqsim {
namespace {

template <typename T, typename Proj>
const T* find_sorted(std::span<const T> items, AbsorberId id, Proj proj) {
  auto it = std::lower_bound(items.begin(), items.end(), id,
                             [&](const T& item, AbsorberId key) { return proj(item) < key; });
  return (it != items.end() && proj(*it) == id) ? &*it : nullptr;
}

std::string describe(AbsorberId id) { return "absorber " + std::to_string(id.value); }

// Walks the offer components and the absorber set in id order and calls
// `on_confirm` for every component whose absorber confirms.
template <typename OnConfirm>
void for_each_confirmation(const OfferWave& ow, const AbsorberSet& absorbers, Regime regime,
                           RandomStream& rng, OnConfirm on_confirm) {
  const auto pool = absorbers.absorbers();
  auto absorber = pool.begin();
  for (const OfferComponent& component : ow.components()) {
    while (absorber != pool.end() && absorber->id < component.absorber) ++absorber;
    if (absorber == pool.end() || absorber->id != component.absorber) {
      throw MissingComponent("offer addresses unknown " + describe(component.absorber));
    }
    bool confirms = true;
    if (regime == Regime::Relativistic) {
      const double p = confirmation_probability(absorber->coupling);
      confirms = p >= 1.0 ? true : p <= 0.0 ? false : rng.bernoulli(p);
    }
    if (confirms) on_confirm(component);
  }
}

}  // namespace

AbsorberSet::AbsorberSet(std::vector<PotentialAbsorber> absorbers)
    : absorbers_(std::move(absorbers)) {
  std::sort(absorbers_.begin(), absorbers_.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(absorbers_.begin(), absorbers_.end(),
                                [](const auto& a, const auto& b) { return a.id == b.id; });
  if (dup != absorbers_.end()) {
    throw InvalidParameter("duplicate " + describe(dup->id));
  }
}

AbsorberSet AbsorberSet::uniform(std::size_t count, Coupling coupling) {
  std::vector<PotentialAbsorber> pool;
  pool.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    pool.push_back({AbsorberId{i}, coupling, {}});
  }
  return AbsorberSet(std::move(pool));
}

const PotentialAbsorber* AbsorberSet::find(AbsorberId id) const {
  return find_sorted<PotentialAbsorber>(absorbers_, id, [](const auto& a) { return a.id; });
}

OfferWave::OfferWave(std::vector<OfferComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidParameter("offer wave has no components");
  for (const auto& c : components_) {
    if (!is_finite(c.amplitude)) {
      throw InvalidParameter("offer amplitude for " + describe(c.absorber) + " is not finite");
    }
  }
  std::sort(components_.begin(), components_.end(),
            [](const auto& a, const auto& b) { return a.absorber < b.absorber; });
  auto dup = std::adjacent_find(components_.begin(), components_.end(), [](const auto& a,
                                                                           const auto& b) {
    return a.absorber == b.absorber;
  });
  if (dup != components_.end()) {
    throw InvalidParameter("offer wave addresses " + describe(dup->absorber) + " twice");
  }
}

const OfferComponent* OfferWave::find(AbsorberId id) const {
  return find_sorted<OfferComponent>(components_, id, [](const auto& c) { return c.absorber; });
}

double confirmation_probability(const Coupling& c) { return c.g() * c.g(); }

DetectorArray::DetectorArray(double count, Coupling coupling)
    : count_(count), coupling_(coupling) {
  if (!(std::isfinite(count) && count >= 1.0 && std::floor(count) == count)) {
    throw InvalidParameter("detector count must be an integer >= 1");
  }
}

double detector_log_complement(const DetectorArray& d) {
  return d.count() * std::log1p(-confirmation_probability(d.coupling()));
}

double detector_response_probability(const DetectorArray& d) {
  return -std::expm1(detector_log_complement(d));
}

std::vector<ConfirmationWave> sample_confirmations(const OfferWave& ow,
                                                   const AbsorberSet& absorbers, Regime regime,
                                                   RandomStream& rng) {
  std::vector<ConfirmationWave> cws;
  for_each_confirmation(ow, absorbers, regime, rng, [&](const OfferComponent& component) {
    cws.push_back(ConfirmationWave::respond_to(component));
  });
  return cws;
}

std::size_t count_confirmations(const OfferWave& ow, const AbsorberSet& absorbers,
                                Regime regime, RandomStream& rng) {
  std::size_t n = 0;
  for_each_confirmation(ow, absorbers, regime, rng, [&](const OfferComponent&) { ++n; });
  return n;
}

std::vector<IncipientTransaction> form_incipient_transactions(
    const OfferWave& ow, std::span<const ConfirmationWave> cws) {
  std::vector<IncipientTransaction> incipients;
  incipients.reserve(cws.size());
  for (const ConfirmationWave& cw : cws) {
    const OfferComponent* offer = ow.find(cw.absorber());
    if (offer == nullptr) {
      throw MissingComponent("confirmation from " + describe(cw.absorber()) +
                             " answers no offer component");
    }
    if (cw.amplitude() != std::conj(offer->amplitude)) {
      throw MissingComponent("confirmation from " + describe(cw.absorber()) +
                             " does not match the offer it answers");
    }
    incipients.push_back({cw.absorber(), (offer->amplitude * cw.amplitude()).real()});
  }
  std::stable_sort(incipients.begin(), incipients.end(),
                   [](const auto& a, const auto& b) { return a.absorber < b.absorber; });
  return incipients;
}

AbsorberId actualize(std::span<const IncipientTransaction> incipients, RandomStream& rng) {
  if (incipients.empty()) throw NoCompetingTransactions("no incipient transactions");
  std::vector<double> weights;
  weights.reserve(incipients.size());
  for (const auto& t : incipients) weights.push_back(t.weight);
  return incipients[weighted_select(weights, rng)].absorber;
}

std::optional<AbsorberId> run_transaction(const OfferWave& ow, const AbsorberSet& absorbers,
                                          Regime regime, RandomStream& rng) {
  const auto cws = sample_confirmations(ow, absorbers, regime, rng);
  if (cws.empty()) return std::nullopt;
  const auto incipients = form_incipient_transactions(ow, cws);
  const bool any_weight = std::any_of(incipients.begin(), incipients.end(),
                                      [](const auto& t) { return t.weight > 0.0; });
  if (!any_weight) return std::nullopt;
  return actualize(incipients, rng);
}

}  // namespace tqsim
