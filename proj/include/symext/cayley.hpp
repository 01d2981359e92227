// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Range and defect subspaces, Cayley transforms, the forbidden relation and
// the admissibility test for Neumann parameters.

#pragma once

#include <optional>
#include <utility>

#include "symext/operators.hpp"

namespace symext {

struct DefectData {
  Complex z;
  Subspace m_z;      // (A - z) D(A)
  Subspace n_z;      // H (-) M_z
  Subspace m_zbar;
  Subspace n_zbar;

  std::pair<Eigen::Index, Eigen::Index> defect_numbers() const { return {n_z.dim(), n_zbar.dim()}; }
};

/// Throws RealPoint when |Im z| is below the real-axis guard.
void require_nonreal(Complex z, const Tolerances& tol = kDefaultTolerances);

/// Defect data of a symmetric A; both z and conj(z) are computed from scratch.
DefectData defect_data(const DomainOperator& a, Complex z, const Tolerances& tol = kDefaultTolerances);

/// dim H - rank((A - z)F) at z and conj(z); defined for any operator.
std::pair<Eigen::Index, Eigen::Index> defect_numbers(const DomainOperator& a, Complex z,
                                                     const Tolerances& tol = kDefaultTolerances);

/// U_z = (A - conj z)(A - z)^-1 from M_z onto M_conj(z).
DomainOperator cayley(const DomainOperator& a, Complex z, const Tolerances& tol = kDefaultTolerances);

/// {((W - E)w, (zW - conj z)w) : w in D(W)}.
LinearRelation inverse_cayley(const DomainOperator& w, Complex z,
                              const Tolerances& tol = kDefaultTolerances);

/// X_z(A) = {(f, psi) in N_z x N_conj(z) : f - psi in (E - U_z) M_z}.
struct ForbiddenOperator {
  LinearRelation relation;
  bool single_valued = true;
  Subspace domain;
  std::optional<DomainOperator> op;  // present iff single_valued
};

ForbiddenOperator forbidden_operator(const DomainOperator& a, Complex z,
                                     const Tolerances& tol = kDefaultTolerances);

struct AdmissibilityResult {
  bool admissible = true;
  double margin = 0.0;               // smallest singular value of W_z - E on D(W_z)
  std::optional<Vector> witness;     // unit fixed vector of W_z when not admissible
};

/// Throws ParameterShapeViolation unless D(T) lies in N_z and R(T) in N_conj(z).
void check_parameter_shape(const DefectData& dd, const DomainOperator& t,
                           const Tolerances& tol = kDefaultTolerances);

/// ker(U_z(A) (+) T - E) = {0}.
AdmissibilityResult is_admissible(const DomainOperator& a, Complex z, const DomainOperator& t,
                                  const Tolerances& tol = kDefaultTolerances);

}  // namespace symext
