// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tqsim {

CoherentState::CoherentState(ComplexAmplitude alpha)
    : CoherentState(alpha, default_truncation(born_weight(alpha))) {}

CoherentState::CoherentState(ComplexAmplitude alpha, std::size_t n_max)
    : alpha_(alpha), n_max_(n_max) {
  if (!is_finite(alpha)) throw InvalidParameter("alpha must be finite");
}

std::size_t CoherentState::default_truncation(double mean_photon_number) {
  if (!(std::isfinite(mean_photon_number) && mean_photon_number >= 0.0)) {
    throw InvalidParameter("mean photon number must be finite and >= 0");
  }
  return static_cast<std::size_t>(
      std::ceil(mean_photon_number + 12.0 * std::sqrt(mean_photon_number + 1.0)));
}

FockVector FockVector::number_state(std::size_t n, std::size_t n_max) {
  if (n > n_max) throw InvalidParameter("number state beyond truncation");
  std::vector<ComplexAmplitude> c(n_max + 1, 0.0);
  c[n] = 1.0;
  return FockVector(std::move(c));
}

double FockVector::norm_squared() const {
  double total = 0.0;
  for (auto c : coefficients_) total += born_weight(c);
  return total;
}

FockVector coherent_coefficients(const CoherentState& s) {
  std::vector<ComplexAmplitude> c(s.n_max() + 1, 0.0);
  const double magnitude = std::abs(s.alpha());
  if (magnitude == 0.0) {
    c[0] = 1.0;
    return FockVector(std::move(c));
  }
  const double log_magnitude = std::log(magnitude);
  const double phase = std::arg(s.alpha());
  const double log_prefactor = -0.5 * magnitude * magnitude;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double nd = static_cast<double>(n);
    const double log_c = log_prefactor + nd * log_magnitude - 0.5 * std::lgamma(nd + 1.0);
    c[n] = std::polar(std::exp(log_c), nd * phase);
  }
  return FockVector(std::move(c));
}

FockVector apply_annihilation(const FockVector& v) {
  std::vector<ComplexAmplitude> out(v.size(), 0.0);
  for (std::size_t n = 0; n + 1 < v.size(); ++n) {
    out[n] = std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
  }
  return FockVector(std::move(out));
}

PhotonNumberSampler::PhotonNumberSampler(const CoherentState& s) {
  const FockVector c = coherent_coefficients(s);
  cdf_.resize(c.size());
  double running = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    running += born_weight(c[n]);
    cdf_[n] = running;
  }
}

std::uint64_t PhotonNumberSampler::operator()(RandomStream& rng) const {
  // The truncated mass falls short of 1 by < 1e-20 plus rounding; draws in
  // that sliver land on n_max.
  const double u = rng.uniform() * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto n = static_cast<std::uint64_t>(it - cdf_.begin());
  return std::min<std::uint64_t>(n, cdf_.size() - 1);
}

std::uint64_t sample_photon_number(const CoherentState& s, RandomStream& rng) {
  return PhotonNumberSampler(s)(rng);
}

QuadratureStats quadrature_statistics(const CoherentState& s, QuadraturePhase phase) {
  const double mean =
      std::numbers::sqrt2 * std::abs(s.alpha()) * std::cos(phase.theta - std::arg(s.alpha()));
  return {mean, 0.5};
}

std::vector<double> sample_quadrature_trace(const CoherentState& s,
                                            std::span<const QuadraturePhase> phases,
                                            RandomStream& rng) {
  std::vector<double> trace;
  trace.reserve(phases.size());
  for (const QuadraturePhase& phase : phases) {
    const QuadratureStats stats = quadrature_statistics(s, phase);
    trace.push_back(stats.mean + std::sqrt(stats.variance) * rng.normal());
  }
  return trace;
}

double absorbing_box(const CoherentState& s, std::uint64_t trials, RandomStream& rng) {
  if (trials == 0) throw InvalidParameter("trials must be >= 1");
  const PhotonNumberSampler sampler(s);
  double total = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) total += static_cast<double>(sampler(rng));
  return total / static_cast<double>(trials);
}

}  // namespace tqsim
