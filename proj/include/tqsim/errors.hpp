// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tqsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates the invariants of its domain type (coupling outside
// [0,1], off-shell external momentum, nonpositive regulator, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Raised while evaluating a well-formed model that has no finite or
// meaningful answer at the requested point.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OnShellPole : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoCompetingTransactions : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidWeight : public DomainError {
 public:
  using DomainError::DomainError;
};

class MissingComponent : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateGeometry : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace tqsim
