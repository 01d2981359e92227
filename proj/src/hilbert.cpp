// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symext/errors.hpp"

namespace symext {
namespace {

Eigen::JacobiSVD<Matrix> full_svd(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

Eigen::Index numerical_rank(const Eigen::VectorXd& sv, double tol) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = tol * sv(0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

}  // namespace

Subspace::Subspace(Eigen::Index ambient_dim) : frame_(ambient_dim, 0) {
  if (ambient_dim < 0) throw DimensionMismatch("negative ambient dimension");
}

Subspace::Subspace(Matrix frame, double tol) : frame_(std::move(frame)) {
  if (frame_.cols() > frame_.rows()) {
    throw DimensionMismatch("frame has more columns than ambient dimension");
  }
  if (frame_.cols() > 0) {
    const Matrix gram = frame_.adjoint() * frame_;
    const double err = (gram - Matrix::Identity(gram.rows(), gram.cols())).norm();
    if (!(err <= tol)) throw DimensionMismatch("frame columns are not orthonormal");
  }
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim));
}

bool Subspace::contains(const Vector& v, double tol) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector/subspace dimension mismatch");
  const double n = v.norm();
  if (n == 0.0) return true;
  const Vector residual = v - frame_ * (frame_.adjoint() * v);
  return residual.norm() <= tol * n;
}

Vector phase_normalized(Vector v) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-6 * scale) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

void phase_normalize_columns(Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.col(j) = phase_normalized(m.col(j));
}

Subspace orthonormalize(const Matrix& vectors, double tol) {
  const Eigen::Index d = vectors.rows();
  if (vectors.cols() == 0) return Subspace(d);
  auto svd = full_svd(vectors);
  const Eigen::Index r = numerical_rank(svd.singularValues(), tol);
  Matrix frame = svd.matrixU().leftCols(r);
  phase_normalize_columns(frame);
  return Subspace(std::move(frame));
}

Subspace orthonormalize(std::span<const Vector> vectors, Eigen::Index ambient_dim, double tol) {
  Matrix m(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != ambient_dim) throw DimensionMismatch("vectors differ in dimension");
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return orthonormalize(m, tol);
}

Vector project(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim()) throw DimensionMismatch("vector/subspace dimension mismatch");
  return s.frame() * (s.frame().adjoint() * v);
}

Subspace complement(const Subspace& s) {
  const Eigen::Index d = s.ambient_dim();
  const Eigen::Index k = s.dim();
  if (k == 0) return Subspace::full(d);
  if (k == d) return Subspace(d);
  auto svd = full_svd(s.frame());
  Matrix frame = svd.matrixU().rightCols(d - k);
  phase_normalize_columns(frame);
  return Subspace(std::move(frame));
}

Eigen::VectorXd principal_cosines(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Eigen::VectorXd(0);
  const Matrix cross = a.frame().adjoint() * b.frame();
  return Eigen::JacobiSVD<Matrix>(cross).singularValues();
}

Subspace intersect(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
  const Matrix cross = a.frame().adjoint() * b.frame();
  auto svd = full_svd(cross);
  const auto& cosines = svd.singularValues();
  Eigen::Index keep = 0;
  while (keep < cosines.size() && cosines(keep) >= 1.0 - tol) ++keep;
  if (keep == 0) return Subspace(a.ambient_dim());
  // Average the two principal-vector sets so neither frame is privileged.
  const Matrix from_a = a.frame() * svd.matrixU().leftCols(keep);
  const Matrix from_b = b.frame() * svd.matrixV().leftCols(keep);
  return orthonormalize(Matrix(0.5 * (from_a + from_b)), 0.5);
}

Subspace span_sum(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  Matrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.frame(), b.frame();
  return orthonormalize(stacked, tol);
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different spaces");
  if (a.dim() != b.dim()) return 1.0;
  if (a.dim() == 0) return 0.0;
  return max_singular_value(a.projector() - b.projector());
}

DirectSumMaps direct_sum_embed(std::span<const Eigen::Index> dims) {
  DirectSumMaps maps;
  for (auto d : dims) {
    if (d < 0) throw DimensionMismatch("negative part dimension");
    maps.total_dim += d;
  }
  Eigen::Index offset = 0;
  for (auto d : dims) {
    Matrix embed = Matrix::Zero(maps.total_dim, d);
    embed.block(offset, 0, d, d).setIdentity();
    maps.projections.push_back(embed.adjoint());
    maps.embeddings.push_back(std::move(embed));
    offset += d;
  }
  return maps;
}

double min_singular_value(const Matrix& m) {
  if (m.cols() == 0) return std::numeric_limits<double>::infinity();
  if (m.rows() < m.cols()) return 0.0;
  auto sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  return sv(sv.size() - 1);
}

double max_singular_value(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

Matrix null_space(const Matrix& m, double tol) {
  const Eigen::Index n = m.cols();
  if (n == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(n, n);
  auto svd = full_svd(m);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv(0));
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  Matrix basis = svd.matrixV().rightCols(n - r);
  phase_normalize_columns(basis);
  return basis;
}

Vector smallest_right_singular_vector(const Matrix& m) {
  auto svd = full_svd(m);
  return phase_normalized(svd.matrixV().col(m.cols() - 1));
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

}  // namespace symext
