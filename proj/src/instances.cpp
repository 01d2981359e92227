// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/instances.hpp"

#include <cmath>
#include <numbers>

#include "symext/errors.hpp"

namespace symext {

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, double norm, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  if (m.size() == 0) return m;
  const double top = max_singular_value(m);
  return top > 0.0 ? Matrix(m * (norm / top)) : m;
}

Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  const Matrix g = random_matrix(n, n, 1.0, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Fix the phases so the distribution does not depend on the QR sign convention.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Vector random_unit(const Matrix& frame, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector coeffs(frame.cols());
  for (auto& c : coeffs) c = Complex(normal(rng), normal(rng));
  Vector v = frame * coeffs;
  return v / v.norm();
}

Complex random_nonreal(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (;;) {
    const double t = angle(rng);
    if (std::abs(std::sin(t)) >= 0.2) return std::polar(radius(rng), t);
  }
}

void validate(const InstanceSpec& spec) {
  if (spec.dim < 1) throw SpecInfeasible("ambient dimension must be positive");
  if (spec.defect < 0 || spec.defect > spec.dim) throw SpecInfeasible("defect must lie in [0, dim]");
  if (!(spec.window_lo > 0.0 && spec.window_hi >= spec.window_lo)) {
    throw SpecInfeasible("spectrum window must be a positive interval away from 0");
  }
  if (spec.dense_range && spec.defect > 0) {
    throw SpecInfeasible("dense range forces R(A) = H and hence defect 0 in finite dimension");
  }
}

DomainOperator gen_symmetric(const InstanceSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  const Eigen::Index d = spec.dim;
  const Eigen::Index k = d - spec.defect;

  const Matrix u = random_unitary(d, rng);
  const Matrix frame = u.leftCols(k);
  const Matrix v = random_unitary(k, rng);
  std::uniform_real_distribution<double> magnitude(spec.window_lo, spec.window_hi);
  std::bernoulli_distribution sign;
  Eigen::VectorXd eig(k);
  for (Eigen::Index i = 0; i < k; ++i) eig(i) = (sign(rng) ? 1.0 : -1.0) * magnitude(rng);
  const Matrix compressed = v * eig.cast<Complex>().asDiagonal() * v.adjoint();

  // Off-domain component; it leaves F^H A F Hermitian and keeps A injective.
  const Matrix outside = u.rightCols(spec.defect) * random_matrix(spec.defect, k, 1.0, rng);
  Matrix action = frame * compressed + outside;
  return DomainOperator(Subspace(frame), std::move(action));
}

DomainOperator worked_example() {
  Matrix frame = Matrix::Zero(2, 1);
  frame(0, 0) = 1.0;
  return DomainOperator(Subspace(frame), frame);
}

DomainOperator shift_isometry(Eigen::Index n) {
  if (n < 1) throw PreconditionViolation("shift length must be at least 1");
  const Matrix id = Matrix::Identity(n + 1, n + 1);
  return DomainOperator(Subspace(Matrix(id.leftCols(n))), id.rightCols(n));
}

DomainOperator truncated_shift(Eigen::Index n) {
  const LinearRelation r = inverse_cayley(shift_isometry(n), Complex(0.0, 1.0));
  return relation_to_operator(r);
}

}  // namespace symext
