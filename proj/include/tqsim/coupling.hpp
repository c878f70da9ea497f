// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tqsim {

// Dimensionless vertex coupling g. Its square is the probability that a
// potential absorber answers an offer with a confirmation.
class Coupling {
 public:
  // Throws InvalidParameter unless 0 <= g <= 1.
  explicit Coupling(double g);

  double g() const { return g_; }

 private:
  double g_;
};

}  // namespace tqsim
