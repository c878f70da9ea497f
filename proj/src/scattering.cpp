// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "tqsim/propagators.hpp"

namespace tqsim {
namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

std::string_view to_string(Channel channel) {
  return channel == Channel::Annihilation ? "annihilation" : "exchange";
}

ScatterProcess::ScatterProcess(const FourVector& p1, const FourVector& p2, const FourVector& p3,
                               const FourVector& p4, double mass)
    : p1_(p1), p2_(p2), p3_(p3), p4_(p4), mass_(mass) {
  if (!(std::isfinite(mass) && mass >= 0.0)) {
    throw InvalidParameter("mass must be finite and >= 0");
  }
  for (const FourVector* p : {&p1_, &p2_, &p3_, &p4_}) {
    if (!p->is_finite()) throw InvalidParameter("external momenta must be finite");
    if (!(p->t > 0.0)) throw InvalidParameter("external momenta must have positive energy");
  }
  const double scale = std::max(1.0, p1_.t + p2_.t);
  const double lin_tol = kTolerance * scale;
  const FourVector in = p1_ + p2_;
  const FourVector out = p3_ + p4_;
  if (!(close(in.t, out.t, lin_tol) && close(in.x, out.x, lin_tol) &&
        close(in.y, out.y, lin_tol) && close(in.z, out.z, lin_tol))) {
    throw InvalidParameter("momentum not conserved: p1 + p2 != p3 + p4");
  }
  const double shell_tol = kTolerance * scale * scale;
  for (const FourVector* p : {&p1_, &p2_, &p3_, &p4_}) {
    if (!close(minkowski_norm2(*p), mass_ * mass_, shell_tol)) {
      throw InvalidParameter("external momentum off its mass shell");
    }
  }
}

ScatterProcess ScatterProcess::center_of_mass(double sqrt_s, double theta, double phi,
                                              double mass) {
  const double e = 0.5 * sqrt_s;
  if (!(std::isfinite(sqrt_s) && e > mass)) {
    throw InvalidParameter("sqrt_s must exceed twice the external mass");
  }
  const double p = std::sqrt((e - mass) * (e + mass));
  const double st = std::sin(theta);
  const FourVector k{0.0, p * st * std::cos(phi), p * st * std::sin(phi), p * std::cos(theta)};
  return ScatterProcess({e, 0.0, 0.0, p}, {e, 0.0, 0.0, -p}, {e, k.x, k.y, k.z},
                        {e, -k.x, -k.y, -k.z}, mass);
}

FourVector channel_momentum(const ScatterProcess& proc, Channel ch) {
  return ch == Channel::Annihilation ? proc.p1() + proc.p2() : proc.p1() - proc.p3();
}

ComplexAmplitude diagram_amplitude(const ScatterProcess& proc, Channel ch, const Coupling& c) {
  const ComplexAmplitude vertex{0.0, c.g()};
  return vertex * green_generic(channel_momentum(proc, ch)) * vertex;
}

ComplexAmplitude total_amplitude(const ScatterProcess& proc, const Coupling& c) {
  return diagram_amplitude(proc, Channel::Annihilation, c) +
         diagram_amplitude(proc, Channel::Exchange, c);
}

double scatter_probability(const ScatterProcess& proc, const Coupling& c) {
  return born_weight(total_amplitude(proc, c));
}

double interference_term(const ScatterProcess& proc, const Coupling& c) {
  const ComplexAmplitude m1 = diagram_amplitude(proc, Channel::Annihilation, c);
  const ComplexAmplitude m2 = diagram_amplitude(proc, Channel::Exchange, c);
  return 2.0 * (std::conj(m1) * m2).real();
}

AmplitudeBreakdown breakdown(const ScatterProcess& proc, const Coupling& c) {
  AmplitudeBreakdown b{};
  b.q2_annihilation = minkowski_norm2(channel_momentum(proc, Channel::Annihilation));
  b.q2_exchange = minkowski_norm2(channel_momentum(proc, Channel::Exchange));
  b.annihilation = diagram_amplitude(proc, Channel::Annihilation, c);
  b.exchange = diagram_amplitude(proc, Channel::Exchange, c);
  b.total = b.annihilation + b.exchange;
  b.probability = born_weight(b.total);
  b.interference = 2.0 * (std::conj(b.annihilation) * b.exchange).real();
  return b;
}

}  // namespace tqsim
