// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "tqsim/core.hpp"
#include "tqsim/coupling.hpp"

// Tree-level two-diagram amplitude for a scalar "Bhabha" process
// p1 + p2 -> p3 + p4.
//
// Each diagram is the product of its Feynman-rule factors,
//
//   M_channel = (i g) * (i / q^2) * (i g) = -i g^2 / q^2,
//
// with the vertex integrations already carried out: they reduce to momentum
// conservation, which ScatterProcess enforces on construction. The model is
// a scalar toy. Spin is ignored, so there is no relative fermionic sign
// between the annihilation and exchange diagrams, and no overall constant
// factor is applied.
//
// Amplitudes are built from propagators and couplings only. Nothing in this
// module samples confirmations: the internal vertex is a coupling that could
// have produced a confirmation but did not.
namespace tqsim {

enum class Channel { Annihilation, Exchange };

std::string_view to_string(Channel channel);

class ScatterProcess {
 public:
  static constexpr double kTolerance = 1e-12;

  // Validates conservation (p1 + p2 = p3 + p4 component-wise), mass shells
  // (p^2 = mass^2) and positive energies, each to kTolerance scaled by
  // max(1, total energy) for the linear checks and its square for the
  // mass-shell check. Throws InvalidParameter on violation.
  ScatterProcess(const FourVector& p1, const FourVector& p2, const FourVector& p3,
                 const FourVector& p4, double mass = 0.0);

  // Centre-of-mass kinematics: beams along +/-z with total energy sqrt_s,
  // outgoing p3 at polar angle theta and azimuth phi.
  static ScatterProcess center_of_mass(double sqrt_s, double theta, double phi,
                                       double mass = 0.0);

  const FourVector& p1() const { return p1_; }
  const FourVector& p2() const { return p2_; }
  const FourVector& p3() const { return p3_; }
  const FourVector& p4() const { return p4_; }
  double mass() const { return mass_; }

 private:
  FourVector p1_, p2_, p3_, p4_;
  double mass_;
};

// Annihilation: p1 + p2. Exchange: p1 - p3.
FourVector channel_momentum(const ScatterProcess& proc, Channel ch);

// -i g^2 / q^2. Throws OnShellPole when the channel momentum is lightlike
// (forward scattering in the exchange channel).
ComplexAmplitude diagram_amplitude(const ScatterProcess& proc, Channel ch, const Coupling& c);

ComplexAmplitude total_amplitude(const ScatterProcess& proc, const Coupling& c);

// conj(M) M for the summed amplitude.
double scatter_probability(const ScatterProcess& proc, const Coupling& c);

// 2 Re(conj(M_annihilation) M_exchange).
double interference_term(const ScatterProcess& proc, const Coupling& c);

struct AmplitudeBreakdown {
  double q2_annihilation;
  double q2_exchange;
  ComplexAmplitude annihilation;
  ComplexAmplitude exchange;
  ComplexAmplitude total;
  double probability;
  double interference;
};

AmplitudeBreakdown breakdown(const ScatterProcess& proc, const Coupling& c);

}  // namespace tqsim
