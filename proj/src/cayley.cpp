// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symext/errors.hpp"

namespace symext {

void require_nonreal(Complex z, const Tolerances& tol) {
  if (!(std::abs(z.imag()) > tol.real_axis)) {
    throw RealPoint("point is too close to the real axis");
  }
}

namespace {

void require_symmetric(const DomainOperator& a, const Tolerances& tol) {
  if (!is_symmetric(a, tol.rank)) throw PreconditionViolation("operator is not symmetric");
}

Eigen::Index rank_of(const Matrix& m, double tol) {
  return orthonormalize(m, tol).dim();
}

}  // namespace

DefectData defect_data(const DomainOperator& a, Complex z, const Tolerances& tol) {
  require_nonreal(z, tol);
  require_symmetric(a, tol);
  const Matrix& frame = a.domain().frame();
  Subspace m_z = orthonormalize(Matrix(a.action() - z * frame), tol.rank);
  Subspace m_zbar = orthonormalize(Matrix(a.action() - std::conj(z) * frame), tol.rank);
  Subspace n_z = complement(m_z);
  Subspace n_zbar = complement(m_zbar);
  return DefectData{z, std::move(m_z), std::move(n_z), std::move(m_zbar), std::move(n_zbar)};
}

std::pair<Eigen::Index, Eigen::Index> defect_numbers(const DomainOperator& a, Complex z,
                                                     const Tolerances& tol) {
  require_nonreal(z, tol);
  const Matrix& frame = a.domain().frame();
  const Eigen::Index d = a.ambient_dim();
  return {d - rank_of(a.action() - z * frame, tol.rank),
          d - rank_of(a.action() - std::conj(z) * frame, tol.rank)};
}

DomainOperator cayley(const DomainOperator& a, Complex z, const Tolerances& tol) {
  require_nonreal(z, tol);
  require_symmetric(a, tol);
  const Eigen::Index d = a.ambient_dim();
  if (a.domain_dim() == 0) return DomainOperator(Subspace(d), Matrix(d, 0));
  const Matrix& frame = a.domain().frame();
  const Matrix shifted = a.action() - z * frame;
  Subspace m_z = orthonormalize(shifted, tol.rank);
  // (A - z) is injective on D(A) for symmetric A and non-real z.
  const Matrix coords = m_z.frame().adjoint() * shifted;
  Matrix action = (a.action() - std::conj(z) * frame) * coords.inverse();
  return DomainOperator(std::move(m_z), std::move(action));
}

LinearRelation inverse_cayley(const DomainOperator& w, Complex z, const Tolerances& tol) {
  require_nonreal(z, tol);
  const Matrix& frame = w.domain().frame();
  const Matrix xs = w.action() - frame;
  const Matrix ys = z * w.action() - std::conj(z) * frame;
  return LinearRelation::from_pairs(xs, ys, tol.rank);
}

ForbiddenOperator forbidden_operator(const DomainOperator& a, Complex z, const Tolerances& tol) {
  const DefectData dd = defect_data(a, z, tol);
  const DomainOperator u = cayley(a, z, tol);
  const Eigen::Index d = a.ambient_dim();
  const Matrix& nz = dd.n_z.frame();
  const Matrix& nzbar = dd.n_zbar.frame();
  // (E - U_z) applied to the frame of M_z.
  const Matrix moved = u.domain().frame() - u.action();

  // Solve f - psi - (E - U_z) m = 0 with f = N_z a, psi = N_zbar b, m in M_z.
  Matrix system(d, nz.cols() + nzbar.cols() + moved.cols());
  system << nz, -nzbar, -moved;
  const Matrix kernel = null_space(system, tol.rank);

  Matrix xs = nz * kernel.topRows(nz.cols());
  Matrix ys = nzbar * kernel.middleRows(nz.cols(), nzbar.cols());
  LinearRelation relation = LinearRelation::from_pairs(xs, ys, tol.rank);

  ForbiddenOperator out{relation, relation_is_operator(relation, tol.rank),
                        relation.domain(tol.rank), std::nullopt};
  if (out.single_valued) out.op = relation_to_operator(relation, tol.rank);
  return out;
}

void check_parameter_shape(const DefectData& dd, const DomainOperator& t, const Tolerances& tol) {
  if (t.ambient_dim() != dd.n_z.ambient_dim()) {
    throw ParameterShapeViolation("parameter lives in a different space");
  }
  const Matrix& ft = t.domain().frame();
  const Matrix off_domain = ft - dd.n_z.frame() * (dd.n_z.frame().adjoint() * ft);
  if (t.domain_dim() > 0 && max_singular_value(off_domain) > tol.inclusion) {
    throw ParameterShapeViolation("D(T) is not contained in N_z(A)");
  }
  const Matrix& img = t.action();
  const Matrix off_range = img - dd.n_zbar.frame() * (dd.n_zbar.frame().adjoint() * img);
  if (t.domain_dim() > 0 &&
      max_singular_value(off_range) > tol.inclusion * std::max(1.0, max_singular_value(img))) {
    throw ParameterShapeViolation("R(T) is not contained in N_conj(z)(A)");
  }
}

AdmissibilityResult is_admissible(const DomainOperator& a, Complex z, const DomainOperator& t,
                                  const Tolerances& tol) {
  const DefectData dd = defect_data(a, z, tol);
  check_parameter_shape(dd, t, tol);
  const DomainOperator u = cayley(a, z, tol);
  const Eigen::Index d = a.ambient_dim();
  const Eigen::Index k = u.domain_dim() + t.domain_dim();
  if (k == 0) return AdmissibilityResult{true, std::numeric_limits<double>::infinity(), std::nullopt};

  Matrix frame(d, k), action(d, k);
  frame << u.domain().frame(), t.domain().frame();
  action << u.action(), t.action();
  const Matrix fixed = action - frame;
  AdmissibilityResult result;
  result.margin = min_singular_value(fixed);
  result.admissible = result.margin > tol.rank;
  if (!result.admissible) {
    Vector w = frame * smallest_right_singular_vector(fixed);
    result.witness = phase_normalized(w / w.norm());
  }
  return result;
}

}  // namespace symext
