// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Linear operators with explicit, possibly non-dense domains, and linear
// relations (subspaces of C^d (+) C^d) for the multivalued cases.
//
// Closedness is automatic in finite dimension, so the closedness hypotheses
// carried by the theory are no-ops here.

#pragma once

#include "symext/hilbert.hpp"

namespace symext {

class LinearRelation;

/// A linear operator on C^d given by an orthonormal domain frame F (d x k)
/// and the images of its columns, `action` (d x k): F c |-> action c.
class DomainOperator {
 public:
  DomainOperator(Subspace domain, Matrix action);

  Eigen::Index ambient_dim() const noexcept { return domain_.ambient_dim(); }
  Eigen::Index domain_dim() const noexcept { return domain_.dim(); }
  const Subspace& domain() const noexcept { return domain_; }
  const Matrix& action() const noexcept { return action_; }

  /// Throws DomainViolation if v is farther than tol * |v| from the domain.
  Vector apply(const Vector& v, double tol = kDefaultTolerances.inclusion) const;

  /// action * frame^H: the operator extended by zero off its domain.
  Matrix full_matrix() const { return action_ * domain_.frame().adjoint(); }

  /// The (k x k) form F^H A F; Hermitian iff the operator is symmetric.
  Matrix form() const { return domain_.frame().adjoint() * action_; }

  bool is_total() const noexcept { return domain_dim() == ambient_dim(); }

 private:
  Subspace domain_;
  Matrix action_;
};

/// A subspace of C^d (+) C^d; vectors are stacked as [x; y].
class LinearRelation {
 public:
  LinearRelation(Eigen::Index ambient_dim, Subspace graph);

  /// The relation spanned by the pairs (xs.col(j), ys.col(j)).
  static LinearRelation from_pairs(const Matrix& xs, const Matrix& ys,
                                   double tol = kDefaultTolerances.rank);

  Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  const Subspace& graph() const noexcept { return graph_; }
  Eigen::Index dim() const noexcept { return graph_.dim(); }

  auto top() const { return graph_.frame().topRows(ambient_dim_); }
  auto bottom() const { return graph_.frame().bottomRows(ambient_dim_); }

  Subspace domain(double tol = kDefaultTolerances.rank) const;
  Subspace range(double tol = kDefaultTolerances.rank) const;
  /// {y : (0, y) in R}.
  Subspace multivalued_part(double tol = kDefaultTolerances.rank) const;
  LinearRelation inverse() const;

  /// Distance of the pair (x, y) from the relation.
  double distance(const Vector& x, const Vector& y) const;

 private:
  Eigen::Index ambient_dim_;
  Subspace graph_;
};

DomainOperator make_operator(Subspace domain, Matrix action);
Vector apply(const DomainOperator& a, const Vector& v, double tol = kDefaultTolerances.inclusion);

/// The operator whose graph is spanned by (xs.col(j), ys.col(j)); throws
/// PreconditionViolation when the pairs are not single-valued.
DomainOperator operator_from_pairs(const Matrix& xs, const Matrix& ys,
                                   double tol = kDefaultTolerances.rank);

bool is_symmetric(const DomainOperator& a, double tol = kDefaultTolerances.rank);
bool is_injective(const DomainOperator& a, double tol = kDefaultTolerances.rank);
/// Smallest singular value of the action in domain coordinates (+inf on a zero domain).
double injectivity_margin(const DomainOperator& a);
bool is_isometric(const DomainOperator& t, double tol = kDefaultTolerances.inclusion);
bool is_nonexpanding(const DomainOperator& t, double tol = kDefaultTolerances.inclusion);

/// D(A^-1) = orthonormalized R(A). Throws NotInvertible.
DomainOperator inverse_op(const DomainOperator& a, double tol = kDefaultTolerances.rank);

LinearRelation graph(const DomainOperator& a);
bool relation_is_operator(const LinearRelation& r, double tol = kDefaultTolerances.rank);
/// Throws PreconditionViolation when r is multivalued.
DomainOperator relation_to_operator(const LinearRelation& r, double tol = kDefaultTolerances.rank);

DomainOperator direct_sum_op(const DomainOperator& a, const DomainOperator& b);
DomainOperator negate(const DomainOperator& a);
DomainOperator scale(const DomainOperator& a, Complex alpha);
/// A - z E on D(A).
DomainOperator shift(const DomainOperator& a, Complex z);
/// b after a, on {v in D(a) : a v in D(b)}.
DomainOperator compose(const DomainOperator& b, const DomainOperator& a,
                       double tol = kDefaultTolerances.rank);
/// Restriction to a subspace of D(a); throws DomainViolation otherwise.
DomainOperator restrict(const DomainOperator& a, const Subspace& sub,
                        double tol = kDefaultTolerances.inclusion);
/// Pushes the operator through an isometry J (D x d): J a J^*.
DomainOperator embed_operator(const DomainOperator& a, const Matrix& isometry);

double graph_distance(const LinearRelation& a, const LinearRelation& b);
double graph_distance(const DomainOperator& a, const DomainOperator& b);
/// Largest residual of graph(a) off graph(b); zero iff graph(a) is inside graph(b).
double graph_excess(const LinearRelation& a, const LinearRelation& b);
bool graph_contains(const DomainOperator& big, const DomainOperator& small,
                    double tol = kDefaultTolerances.inclusion);

}  // namespace symext
