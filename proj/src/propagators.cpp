// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/propagators.hpp"

#include <cmath>

namespace tqsim {
namespace {

constexpr double kOnShellTolerance = 1e-12;

struct Denominator {
  double re;
  double im;
};

// (q.t + i s eps)^2 - |q_vec|^2 for s = +1 (retarded) or -1 (advanced).
Denominator one_sided_denominator(const FourVector& q, double signed_eps) {
  return {(q.t * q.t - signed_eps * signed_eps) - q.spatial_norm2(), 2.0 * q.t * signed_eps};
}

ComplexAmplitude reciprocal(Denominator d) {
  const double norm = d.re * d.re + d.im * d.im;
  return {d.re / norm, -d.im / norm};
}

}  // namespace

Regulator::Regulator(double epsilon) : epsilon_(epsilon) {
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
    throw InvalidParameter("regulator epsilon must be finite and > 0");
  }
}

std::string_view to_string(PropagatorKind kind) {
  switch (kind) {
    case PropagatorKind::Retarded: return "retarded";
    case PropagatorKind::Advanced: return "advanced";
    case PropagatorKind::Feynman: return "feynman";
    case PropagatorKind::TimeSymmetric: return "time-symmetric";
    case PropagatorKind::Generic: return "generic";
  }
  return "unknown";
}

ComplexAmplitude green_generic(const FourVector& q) {
  const double q2 = minkowski_norm2(q);
  const double scale = q.t * q.t + q.spatial_norm2();
  if (scale == 0.0 || std::abs(q2) <= kOnShellTolerance * scale) {
    throw OnShellPole("generic propagator evaluated on the light cone (q^2 = 0)");
  }
  return {0.0, 1.0 / q2};
}

ComplexAmplitude green_feynman(const FourVector& q, const Regulator& reg) {
  // i / (q^2 + i eps) = (eps + i q^2) / (q^4 + eps^2)
  const double q2 = minkowski_norm2(q);
  const double eps = reg.epsilon();
  const double norm = q2 * q2 + eps * eps;
  return {eps / norm, q2 / norm};
}

ComplexAmplitude green_retarded(const FourVector& q, const Regulator& reg) {
  return reciprocal(one_sided_denominator(q, reg.epsilon()));
}

ComplexAmplitude green_advanced(const FourVector& q, const Regulator& reg) {
  return reciprocal(one_sided_denominator(q, -reg.epsilon()));
}

ComplexAmplitude green_time_symmetric(const FourVector& q, const Regulator& reg) {
  const Denominator d = one_sided_denominator(q, reg.epsilon());
  return {d.re / (d.re * d.re + d.im * d.im), 0.0};
}

ComplexAmplitude propagator(PropagatorKind kind, const FourVector& q, const Regulator& reg) {
  switch (kind) {
    case PropagatorKind::Retarded: return green_retarded(q, reg);
    case PropagatorKind::Advanced: return green_advanced(q, reg);
    case PropagatorKind::Feynman: return green_feynman(q, reg);
    case PropagatorKind::TimeSymmetric: return green_time_symmetric(q, reg);
    case PropagatorKind::Generic: return green_generic(q);
  }
  throw InvalidParameter("unknown propagator kind");
}

}  // namespace tqsim
