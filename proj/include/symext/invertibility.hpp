// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Invertibility of Neumann extensions, decided three ways, and the
// constructive invertible self-adjoint extension built by rank-one steps.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symext/neumann.hpp"

namespace symext {

/// The three equivalent invertibility tests for B = A_T:
///   direct            ker B = {0};
///   via_admissibility (z / conj z) T is 1/z-admissible w.r.t. A^-1;
///   via_forbidden     T - (conj z / z) X_{1/z}(A^-1) is injective on D(T) cap D(X).
struct InvertibilityVerdict {
  bool direct = false;
  bool via_admissibility = false;
  bool via_forbidden = false;
  bool agree = false;
  double direct_margin = 0.0;
  double admissibility_margin = 0.0;
  double forbidden_margin = 0.0;
  std::optional<Vector> witness;

  double margin() const;
};

/// Throws NotInvertibleBase if A has a kernel; propagates NotAdmissible.
InvertibilityVerdict check_invertibility(const DomainOperator& a, const ContractionParameter& param,
                                         const Tolerances& tol = kDefaultTolerances);

/// A (+) (-A) on C^d (+) C^d.
DomainOperator double_op(const DomainOperator& a);

struct ChainStep {
  Vector f1;                 // unit vector of N_z(current)
  Vector h;                  // unit vector of N_conj(z)(current), T f1 = h
  DomainOperator extension;  // operator after this step
  std::pair<Eigen::Index, Eigen::Index> defect_numbers;
  double forbidden_distance = 0.0;  // distance of (f1, h) from both forbidden relations
};

struct ExtensionChain {
  Complex z;
  std::uint64_t seed = 0;
  bool doubled = false;
  Eigen::Index base_dim = 0;
  Eigen::Index exit_dim = 0;
  DomainOperator start;  // the operator the chain starts from (A, or A (+) (-A))
  std::vector<ChainStep> steps;
  DomainOperator final_op;

  /// Full Hermitian matrix of the final operator on C^(base_dim + exit_dim).
  Matrix final_matrix() const { return final_op.full_matrix(); }
};

struct ChainOptions {
  bool use_double = false;
  int candidates = 64;  // seeded candidate directions per step when dim N > 1
};

/// Rank-one isometric steps f1 |-> h with h kept away from the images of f1
/// under X_z(current) and (conj z / z) X_{1/z}(current^-1); each step keeps
/// the operator injective and lowers both defect numbers by one.
ExtensionChain build_invertible_selfadjoint(const DomainOperator& a, Complex z, std::uint64_t seed,
                                            const ChainOptions& options = {},
                                            const Tolerances& tol = kDefaultTolerances);

}  // namespace symext
