// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations for the tests. They deliberately avoid the
// library's SVD-based routines: ranks come from full-pivot LU, projectors
// from normal equations, inverses from explicit formulas.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Eigen::Index rank(const Matrix& m, double tol = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(tol);
  return lu.rank();
}

/// Orthogonal projector onto span(cols) via pseudo-inverse of the Gram matrix
/// restricted to a maximal independent column subset.
inline Matrix projector(const Matrix& cols, double tol = 1e-9) {
  const Eigen::Index d = cols.rows();
  if (cols.cols() == 0) return Matrix::Zero(d, d);
  Eigen::FullPivLU<Matrix> lu(cols);
  lu.setThreshold(tol);
  const Matrix basis = lu.image(cols);
  const Matrix gram = basis.adjoint() * basis;
  return basis * gram.inverse() * basis.adjoint();
}

inline double norm2(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  // Spectral norm via the largest eigenvalue of m^H m.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m.adjoint() * m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

inline Matrix e(Eigen::Index d, Eigen::Index k) {
  Matrix v = Matrix::Zero(d, 1);
  v(k, 0) = 1.0;
  return v;
}

inline Matrix gaussian(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

}  // namespace oracle
