// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "tqsim/errors.hpp"
#include "tqsim/random.hpp"

// Natural units (hbar = c = 1) throughout. Minkowski signature (+,-,-,-).
namespace tqsim {

// Offer, confirmation and coupling amplitudes, Fock coefficients.
using ComplexAmplitude = std::complex<double>;

inline bool is_finite(ComplexAmplitude a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

// Born weight conj(m) * m.
inline double born_weight(ComplexAmplitude m) {
  return m.real() * m.real() + m.imag() * m.imag();
}

struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr FourVector& operator+=(const FourVector& o) {
    t += o.t, x += o.x, y += o.y, z += o.z;
    return *this;
  }
  constexpr FourVector& operator-=(const FourVector& o) {
    t -= o.t, x -= o.x, y -= o.y, z -= o.z;
    return *this;
  }
  constexpr FourVector operator-() const { return {-t, -x, -y, -z}; }

  // Squared length of the spatial part.
  constexpr double spatial_norm2() const { return x * x + y * y + z * z; }
  bool is_finite() const;

  friend constexpr bool operator==(const FourVector&, const FourVector&) = default;
};

constexpr FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
constexpr FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
constexpr FourVector operator*(double s, const FourVector& v) {
  return {s * v.t, s * v.x, s * v.y, s * v.z};
}

constexpr double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

constexpr double minkowski_norm2(const FourVector& a) { return minkowski_dot(a, a); }

// Draws index i with probability weights[i] / sum(weights).
//
// Throws InvalidWeight for a negative or non-finite weight and
// NoCompetingTransactions when the weights are empty or all zero. Zero-weight
// entries are never selected.
std::size_t weighted_select(std::span<const double> weights, RandomStream& rng);

}  // namespace tqsim
