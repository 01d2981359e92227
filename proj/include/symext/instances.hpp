// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded generators for symmetric invertible operators with prescribed
// defect, the two-dimensional worked example, and a finite section of the
// unilateral shift.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "symext/neumann.hpp"

namespace symext {

struct InstanceSpec {
  Eigen::Index dim = 2;
  Eigen::Index defect = 1;
  bool dense_range = false;
  double window_lo = 0.5;  // eigen-magnitudes of the compressed form
  double window_hi = 2.0;
  std::uint64_t seed = 0;
};

/// Throws SpecInfeasible for an unsatisfiable spec. A dense range forces
/// defect 0 in finite dimension, so dense_range with defect >= 1 is rejected.
void validate(const InstanceSpec& spec);

/// Symmetric injective operator with dim D(A) = dim - defect.
DomainOperator gen_symmetric(const InstanceSpec& spec);

/// A: e1 -> e1 on span{e1} in C^2.
DomainOperator worked_example();

inline constexpr std::string_view kTruncatedShiftNote =
    "finite section of the unilateral shift; defect (1,1), not the (0,1) of the infinite construction";

/// Inverse Cayley transform at z = i of V: f_k -> f_(k+1), k < n, in C^(n+1).
DomainOperator truncated_shift(Eigen::Index n);
/// The partial isometry V itself.
DomainOperator shift_isometry(Eigen::Index n);

/// Uniform unit vector in span(frame).
Vector random_unit(const Matrix& frame, std::mt19937_64& rng);
/// Gaussian matrix rescaled to spectral norm `norm`.
Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, double norm, std::mt19937_64& rng);
/// Haar-like unitary from the QR of a Gaussian matrix.
Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng);
/// z = r e^{i t} with r in [0.5, 2] and |sin t| >= 0.2.
Complex random_nonreal(std::mt19937_64& rng);

}  // namespace symext
