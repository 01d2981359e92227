// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace symext {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotInvertibleBase : public Error {
 public:
  using Error::Error;
};

class RealPoint : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ParameterShapeViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when U_z(A) (+) T - E has a nonzero kernel; carries the unit kernel vector.
class NotAdmissible : public Error {
 public:
  NotAdmissible(const std::string& what, Eigen::VectorXcd witness)
      : Error(what), witness_(std::move(witness)) {}
  const Eigen::VectorXcd& witness() const noexcept { return witness_; }

 private:
  Eigen::VectorXcd witness_;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

class ChoiceExhausted : public Error {
 public:
  using Error::Error;
};

class SpectrumHit : public Error {
 public:
  using Error::Error;
};

class ProjectionDegenerate : public Error {
 public:
  using Error::Error;
};

class ResolventSingular : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class SpecInfeasible : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace symext
