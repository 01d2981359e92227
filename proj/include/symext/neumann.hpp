// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Generalized Neumann formulas: admissible non-expanding parameters T with
// D(T) in N_z(A), R(T) in N_conj(z)(A) correspond one-to-one to the
// symmetric / dissipative / accumulative extensions B of A:
//
//   D(B) = D(A) + (T - E) D(T),   B(f + T psi - psi) = A f + z T psi - conj(z) psi.

#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "symext/cayley.hpp"

namespace symext {

enum class ParameterKind { kIsometric, kStrictlyContractive, kMixed };
enum class Classification { kSymmetric, kDissipative, kAccumulative, kSelfAdjoint, kIndefinite };

std::string_view to_string(ParameterKind kind);
std::string_view to_string(Classification c);

struct ContractionParameter {
  Complex z;
  DomainOperator t;
  ParameterKind kind;
};

/// Validates non-expansion (ParameterShapeViolation otherwise) and labels the kind.
ContractionParameter make_parameter(Complex z, DomainOperator t,
                                    const Tolerances& tol = kDefaultTolerances);

/// Parameter given by an n x n matrix in the defect frames of A at z.
ContractionParameter parameter_from_matrix(const DefectData& dd, const Matrix& coeffs,
                                           const Tolerances& tol = kDefaultTolerances);

struct ExtensionReport {
  DomainOperator b;
  ContractionParameter parameter;
  Classification classification;
  bool invertible = false;
  std::pair<Eigen::Index, Eigen::Index> defect_numbers_of_b;
  std::optional<Vector> kernel_witness;  // unit vector of ker B when not invertible
};

/// Throws NotAdmissible (with the kernel witness) or ParameterShapeViolation.
ExtensionReport extend(const DomainOperator& a, const ContractionParameter& param,
                       const Tolerances& tol = kDefaultTolerances);

/// D(T) = N_z(A) cap R(B - z),  T = (B - conj z)(B - z)^-1 on D(T).
/// Throws NotAnExtension when graph(A) is not inside graph(B).
ContractionParameter recover_parameter(const DomainOperator& a, const DomainOperator& b, Complex z,
                                       const Tolerances& tol = kDefaultTolerances);

/// Sign of Im(Bv, v) on D(B); self-adjoint needs symmetry, full domain and defect (0, 0).
Classification classify(const DomainOperator& b, const Tolerances& tol = kDefaultTolerances);
Classification classify(const ExtensionReport& report, const Tolerances& tol = kDefaultTolerances);

}  // namespace symext
