// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/operators.hpp"

#include <algorithm>
#include <limits>

#include "symext/errors.hpp"

namespace symext {
namespace {

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

}  // namespace

DomainOperator::DomainOperator(Subspace domain, Matrix action)
    : domain_(std::move(domain)), action_(std::move(action)) {
  if (action_.rows() != domain_.ambient_dim() || action_.cols() != domain_.dim()) {
    throw DimensionMismatch("action must be ambient_dim x dim(domain)");
  }
}

Vector DomainOperator::apply(const Vector& v, double tol) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector/operator dimension mismatch");
  if (!domain_.contains(v, tol)) throw DomainViolation("vector is not in the operator domain");
  return action_ * (domain_.frame().adjoint() * v);
}

LinearRelation::LinearRelation(Eigen::Index ambient_dim, Subspace graph)
    : ambient_dim_(ambient_dim), graph_(std::move(graph)) {
  if (graph_.ambient_dim() != 2 * ambient_dim) {
    throw DimensionMismatch("relation graph must live in C^d (+) C^d");
  }
}

LinearRelation LinearRelation::from_pairs(const Matrix& xs, const Matrix& ys, double tol) {
  if (xs.rows() != ys.rows() || xs.cols() != ys.cols()) {
    throw DimensionMismatch("pair matrices differ in shape");
  }
  return LinearRelation(xs.rows(), orthonormalize(stack(xs, ys), tol));
}

Subspace LinearRelation::domain(double tol) const { return orthonormalize(Matrix(top()), tol); }

Subspace LinearRelation::range(double tol) const { return orthonormalize(Matrix(bottom()), tol); }

Subspace LinearRelation::multivalued_part(double tol) const {
  if (dim() == 0) return Subspace(ambient_dim_);
  const Matrix kernel = null_space(Matrix(top()), tol);
  if (kernel.cols() == 0) return Subspace(ambient_dim_);
  return orthonormalize(Matrix(bottom() * kernel), tol);
}

LinearRelation LinearRelation::inverse() const {
  return LinearRelation(ambient_dim_, Subspace(stack(Matrix(bottom()), Matrix(top()))));
}

double LinearRelation::distance(const Vector& x, const Vector& y) const {
  Vector pair(2 * ambient_dim_);
  pair << x, y;
  return (pair - graph_.frame() * (graph_.frame().adjoint() * pair)).norm();
}

DomainOperator make_operator(Subspace domain, Matrix action) {
  return DomainOperator(std::move(domain), std::move(action));
}

Vector apply(const DomainOperator& a, const Vector& v, double tol) { return a.apply(v, tol); }

bool is_symmetric(const DomainOperator& a, double tol) { return is_hermitian(a.form(), tol); }

double injectivity_margin(const DomainOperator& a) { return min_singular_value(a.action()); }

bool is_injective(const DomainOperator& a, double tol) {
  if (a.domain_dim() == 0) return true;
  const double top = max_singular_value(a.action());
  if (top == 0.0) return false;
  return injectivity_margin(a) > tol * top;
}

bool is_isometric(const DomainOperator& t, double tol) {
  if (t.domain_dim() == 0) return true;
  const Matrix gram = t.action().adjoint() * t.action();
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).norm() <= tol;
}

bool is_nonexpanding(const DomainOperator& t, double tol) {
  return max_singular_value(t.action()) <= 1.0 + tol;
}

DomainOperator inverse_op(const DomainOperator& a, double tol) {
  if (!is_injective(a, tol)) throw NotInvertible("operator has a nontrivial kernel");
  const Eigen::Index d = a.ambient_dim();
  if (a.domain_dim() == 0) return DomainOperator(Subspace(d), Matrix(d, 0));
  Subspace range = orthonormalize(a.action(), tol);
  const Matrix coords = range.frame().adjoint() * a.action();
  Matrix action = a.domain().frame() * coords.inverse();
  return DomainOperator(std::move(range), std::move(action));
}

LinearRelation graph(const DomainOperator& a) {
  return LinearRelation::from_pairs(a.domain().frame(), a.action());
}

bool relation_is_operator(const LinearRelation& r, double tol) {
  if (r.dim() == 0) return true;
  if (r.dim() > r.ambient_dim()) return false;
  return min_singular_value(Matrix(r.top())) > tol;
}

DomainOperator relation_to_operator(const LinearRelation& r, double tol) {
  if (!relation_is_operator(r, tol)) {
    throw PreconditionViolation("linear relation is multivalued");
  }
  const Eigen::Index d = r.ambient_dim();
  if (r.dim() == 0) return DomainOperator(Subspace(d), Matrix(d, 0));
  const Matrix top = r.top();
  Subspace domain = orthonormalize(top, 0.5 * tol);
  if (domain.dim() != r.dim()) throw PreconditionViolation("linear relation is multivalued");
  const Matrix coords = domain.frame().adjoint() * top;
  Matrix action = Matrix(r.bottom()) * coords.inverse();
  return DomainOperator(std::move(domain), std::move(action));
}

DomainOperator operator_from_pairs(const Matrix& xs, const Matrix& ys, double tol) {
  return relation_to_operator(LinearRelation::from_pairs(xs, ys, tol), tol);
}

DomainOperator direct_sum_op(const DomainOperator& a, const DomainOperator& b) {
  const Eigen::Index da = a.ambient_dim(), db = b.ambient_dim();
  const Eigen::Index ka = a.domain_dim(), kb = b.domain_dim();
  Matrix frame = Matrix::Zero(da + db, ka + kb);
  Matrix action = Matrix::Zero(da + db, ka + kb);
  frame.block(0, 0, da, ka) = a.domain().frame();
  frame.block(da, ka, db, kb) = b.domain().frame();
  action.block(0, 0, da, ka) = a.action();
  action.block(da, ka, db, kb) = b.action();
  return DomainOperator(Subspace(std::move(frame)), std::move(action));
}

DomainOperator scale(const DomainOperator& a, Complex alpha) {
  return DomainOperator(a.domain(), alpha * a.action());
}

DomainOperator negate(const DomainOperator& a) { return scale(a, Complex(-1.0, 0.0)); }

DomainOperator shift(const DomainOperator& a, Complex z) {
  return DomainOperator(a.domain(), a.action() - z * a.domain().frame());
}

DomainOperator compose(const DomainOperator& b, const DomainOperator& a, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("compose: ambient dimensions differ");
  const Eigen::Index d = a.ambient_dim();
  if (a.domain_dim() == 0) return DomainOperator(Subspace(d), Matrix(d, 0));
  const Matrix off_b = a.action() - b.domain().frame() * (b.domain().frame().adjoint() * a.action());
  const Matrix coeffs = null_space(off_b, tol);
  if (coeffs.cols() == 0) return DomainOperator(Subspace(d), Matrix(d, 0));
  const Matrix xs = a.domain().frame() * coeffs;
  const Matrix ys = b.action() * (b.domain().frame().adjoint() * (a.action() * coeffs));
  return operator_from_pairs(xs, ys, tol);
}

DomainOperator restrict(const DomainOperator& a, const Subspace& sub, double tol) {
  if (sub.ambient_dim() != a.ambient_dim()) throw DimensionMismatch("restrict: ambient dimensions differ");
  for (Eigen::Index j = 0; j < sub.dim(); ++j) {
    if (!a.domain().contains(sub.frame().col(j), tol)) {
      throw DomainViolation("restriction subspace is not inside the domain");
    }
  }
  return DomainOperator(sub, a.action() * (a.domain().frame().adjoint() * sub.frame()));
}

DomainOperator embed_operator(const DomainOperator& a, const Matrix& isometry) {
  if (isometry.cols() != a.ambient_dim()) throw DimensionMismatch("embedding has wrong source dimension");
  Matrix frame = isometry * a.domain().frame();
  return DomainOperator(Subspace(std::move(frame)), isometry * a.action());
}

double graph_distance(const LinearRelation& a, const LinearRelation& b) {
  return subspace_distance(a.graph(), b.graph());
}

double graph_distance(const DomainOperator& a, const DomainOperator& b) {
  return graph_distance(graph(a), graph(b));
}

double graph_excess(const LinearRelation& a, const LinearRelation& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("relations live in different spaces");
  if (a.dim() == 0) return 0.0;
  const Matrix& ga = a.graph().frame();
  const Matrix& gb = b.graph().frame();
  return max_singular_value(ga - gb * (gb.adjoint() * ga));
}

bool graph_contains(const DomainOperator& big, const DomainOperator& small, double tol) {
  return graph_excess(graph(small), graph(big)) <= tol;
}

}  // namespace symext
