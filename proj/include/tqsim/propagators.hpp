// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "tqsim/core.hpp"

// Momentum-space massless scalar propagators.
//
// Normalization: the generic and Feynman propagators carry the factor i of
// the Feynman rule, i/q^2 and i/(q^2 + i eps). The retarded, advanced and
// time-symmetric propagators are Green functions without that factor:
//
//   retarded(q)       = 1 / ((q.t + i eps)^2 - |q_vec|^2)
//   advanced(q)       = 1 / ((q.t - i eps)^2 - |q_vec|^2)
//   time_symmetric(q) = (retarded + advanced) / 2
//
// so off shell, as eps -> 0, i * time_symmetric and feynman agree.
namespace tqsim {

class Regulator {
 public:
  // Throws InvalidParameter unless epsilon is finite and > 0.
  explicit Regulator(double epsilon);

  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

inline constexpr double kDefaultEpsilon = 1e-9;

enum class PropagatorKind { Retarded, Advanced, Feynman, TimeSymmetric, Generic };

std::string_view to_string(PropagatorKind kind);

// i / q^2. Throws OnShellPole when q^2 vanishes relative to the Euclidean
// scale of q (|q^2| <= 1e-12 (t^2 + |q_vec|^2)), including q = 0.
ComplexAmplitude green_generic(const FourVector& q);

ComplexAmplitude green_feynman(const FourVector& q, const Regulator& reg);
ComplexAmplitude green_retarded(const FourVector& q, const Regulator& reg);
ComplexAmplitude green_advanced(const FourVector& q, const Regulator& reg);

// Evaluated in closed form, Re(d) / |d|^2 with d the retarded denominator.
// The imaginary part is identically zero: the retarded and advanced
// denominators are complex conjugates.
ComplexAmplitude green_time_symmetric(const FourVector& q, const Regulator& reg);

// Dispatch on kind. The regulator is ignored for Generic.
ComplexAmplitude propagator(PropagatorKind kind, const FourVector& q, const Regulator& reg);

}  // namespace tqsim
