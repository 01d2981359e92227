// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex linear algebra on C^d: orthonormal frames, projections,
// complements, intersections and canonical direct-sum embeddings.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace symext {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance set shared by every module. Rank decisions compare singular
/// values against `rank` times the largest singular value (or absolutely, for
/// matrices with orthonormal columns).
struct Tolerances {
  double rank = 1e-10;
  double inclusion = 1e-8;
  double real_axis = 1e-8;
  double margin = 1e-6;
};

inline constexpr Tolerances kDefaultTolerances{};

/// A closed subspace of C^d stored as an orthonormal frame (d x k).
class Subspace {
 public:
  /// The zero subspace of C^d.
  explicit Subspace(Eigen::Index ambient_dim);
  /// Takes ownership of a frame; throws DimensionMismatch if the columns are
  /// not orthonormal within `tol`.
  Subspace(Matrix frame, double tol = 1e-8);

  Eigen::Index ambient_dim() const noexcept { return frame_.rows(); }
  Eigen::Index dim() const noexcept { return frame_.cols(); }
  const Matrix& frame() const noexcept { return frame_; }
  bool is_zero() const noexcept { return frame_.cols() == 0; }

  Matrix projector() const { return frame_ * frame_.adjoint(); }

  /// Distance of v from the subspace relative to |v|; exact zero vectors belong.
  bool contains(const Vector& v, double tol = kDefaultTolerances.inclusion) const;

  static Subspace full(Eigen::Index ambient_dim);

 private:
  Matrix frame_;
};

/// Spans the columns of `vectors`; rank is decided by singular values above
/// tol times the largest. Columns come out phase-normalized.
Subspace orthonormalize(const Matrix& vectors, double tol = kDefaultTolerances.rank);
Subspace orthonormalize(std::span<const Vector> vectors, Eigen::Index ambient_dim,
                        double tol = kDefaultTolerances.rank);

Vector project(const Subspace& s, const Vector& v);
Subspace complement(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b, double tol = kDefaultTolerances.rank);
Subspace span_sum(const Subspace& a, const Subspace& b, double tol = kDefaultTolerances.rank);

/// Spectral-norm distance of the orthogonal projectors; 1 when dimensions differ.
double subspace_distance(const Subspace& a, const Subspace& b);

/// Cosines of the principal angles between a and b, descending.
Eigen::VectorXd principal_cosines(const Subspace& a, const Subspace& b);

struct DirectSumMaps {
  std::vector<Matrix> embeddings;   // total x d_i isometries
  std::vector<Matrix> projections;  // d_i x total coordinate projections
  Eigen::Index total_dim = 0;
};

DirectSumMaps direct_sum_embed(std::span<const Eigen::Index> dims);

// Small numerical helpers shared across modules.

/// Rotates v by a unit phase so its first coordinate of magnitude above
/// 1e-6 * |v|_inf is real and positive.
Vector phase_normalized(Vector v);
void phase_normalize_columns(Matrix& m);

double min_singular_value(const Matrix& m);
double max_singular_value(const Matrix& m);

/// Orthonormal basis of ker(m): right singular vectors whose singular value is
/// at most tol * max(1, sigma_max).
Matrix null_space(const Matrix& m, double tol = kDefaultTolerances.rank);

/// Unit right singular vector for the smallest singular value (phase-normalized).
Vector smallest_right_singular_vector(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kDefaultTolerances.rank);

}  // namespace symext
