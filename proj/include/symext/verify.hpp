// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Identity suite over an (A, Atilde) pair: inverse-operator identities for
// defect spaces and Cayley transforms, round trips, the L / B / F identities,
// resolvent symmetry, the Shtraus correspondence and the I-admissibility test.

#pragma once

#include <string>
#include <vector>

#include "symext/resolvents.hpp"

namespace symext {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  double value = 0.0;      // worst observed deviation
  double threshold = 0.0;
  bool hypotheses_ok = true;  // Atilde Hermitian and extending A
  int points = 0;             // grid points evaluated
  int degenerate_points = 0;  // grid points skipped as degenerate
  std::string note;
};

struct VerifyOptions {
  Complex lambda0{0.0, 1.0};
  std::vector<Complex> grid;  // empty: default_grid(lambda0, Atilde)
  double cayley_tol = 1e-10;
  double identity_tol = 1e-8;
  double symmetry_tol = 1e-10;
  double shtraus_tol = 1e-8;
  double round_trip_tol = 1e-9;
  SectorSpec sector;  // empty radii: SectorSpec::default_for(lambda0)
  IAdmissibilityOptions i_options;
  Tolerances tol = kDefaultTolerances;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double hermiticity_residual = 0.0;
  double containment_residual = 0.0;
  Eigen::Index defect = 0;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// `e` may be built with EmbeddedExtension::unchecked; a failed hypothesis
/// marks every check that depends on Atilde as failed.
VerifyReport run_verify(const EmbeddedExtension& e, const VerifyOptions& options = {});

}  // namespace symext
