// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tqsim/core.hpp"

// Coherent states of a single field mode in a truncated Fock basis.
//
//   |alpha> = exp(-|alpha|^2 / 2) sum_n alpha^n / sqrt(n!) |n>
//
// Quadrature convention: X_theta = (a e^{-i theta} + a^dagger e^{i theta}) / sqrt(2),
// so the vacuum variance is 1/2.
namespace tqsim {

class CoherentState {
 public:
  // Truncation at default_truncation(|alpha|^2).
  explicit CoherentState(ComplexAmplitude alpha);
  // Throws InvalidParameter if alpha is not finite.
  CoherentState(ComplexAmplitude alpha, std::size_t n_max);

  // ceil(m + 12 sqrt(m + 1)) for mean photon number m. The Poisson tail
  // beyond this point is below 1e-20.
  static std::size_t default_truncation(double mean_photon_number);

  ComplexAmplitude alpha() const { return alpha_; }
  std::size_t n_max() const { return n_max_; }
  double mean_photon_number() const { return born_weight(alpha_); }

 private:
  ComplexAmplitude alpha_;
  std::size_t n_max_;
};

// Fock-basis coefficients c_0..c_{n_max}.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(std::vector<ComplexAmplitude> coefficients)
      : coefficients_(std::move(coefficients)) {}

  // Basis state |n> in a space truncated at n_max.
  static FockVector number_state(std::size_t n, std::size_t n_max);

  std::span<const ComplexAmplitude> coefficients() const { return coefficients_; }
  std::size_t n_max() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  std::size_t size() const { return coefficients_.size(); }
  ComplexAmplitude operator[](std::size_t n) const { return coefficients_[n]; }

  double norm_squared() const;

 private:
  std::vector<ComplexAmplitude> coefficients_;
};

// Magnitudes are built from log|c_n| = -|alpha|^2/2 + n log|alpha| - lgamma(n+1)/2,
// so |alpha|^2 up to ~1e4 does not overflow.
FockVector coherent_coefficients(const CoherentState& s);

// (a v)_n = sqrt(n+1) v_{n+1}; the top coefficient is zero.
FockVector apply_annihilation(const FockVector& v);

// Inversion sampler over the photon-number distribution |c_n|^2 of a
// coherent state, i.e. Poisson(|alpha|^2) truncated at n_max. Build once,
// draw many times.
class PhotonNumberSampler {
 public:
  explicit PhotonNumberSampler(const CoherentState& s);

  std::uint64_t operator()(RandomStream& rng) const;

  std::span<const double> cdf() const { return cdf_; }

 private:
  std::vector<double> cdf_;
};

std::uint64_t sample_photon_number(const CoherentState& s, RandomStream& rng);

struct QuadraturePhase {
  double theta = 0.0;
};

struct QuadratureStats {
  double mean;
  double variance;
};

// mean = sqrt(2) |alpha| cos(theta - arg alpha), variance = 1/2.
QuadratureStats quadrature_statistics(const CoherentState& s, QuadraturePhase phase);

// One Gaussian draw per phase with the exact coherent-state quadrature law.
std::vector<double> sample_quadrature_trace(const CoherentState& s,
                                            std::span<const QuadraturePhase> phases,
                                            RandomStream& rng);

// Mean photon count recorded by a perfect absorber over `trials` fills.
// Throws InvalidParameter for zero trials.
double absorbing_box(const CoherentState& s, std::uint64_t trials, RandomStream& rng);

}  // namespace tqsim
