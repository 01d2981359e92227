// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/neumann.hpp"

#include <algorithm>

#include "symext/errors.hpp"

namespace symext {

std::string_view to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kIsometric: return "isometric";
    case ParameterKind::kStrictlyContractive: return "strictly-contractive";
    case ParameterKind::kMixed: return "mixed";
  }
  return "unknown";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kSymmetric: return "symmetric";
    case Classification::kDissipative: return "dissipative";
    case Classification::kAccumulative: return "accumulative";
    case Classification::kSelfAdjoint: return "self-adjoint";
    case Classification::kIndefinite: return "indefinite";
  }
  return "unknown";
}

ContractionParameter make_parameter(Complex z, DomainOperator t, const Tolerances& tol) {
  require_nonreal(z, tol);
  const double top = max_singular_value(t.action());
  if (top > 1.0 + tol.inclusion) throw ParameterShapeViolation("parameter is not non-expanding");
  ParameterKind kind = ParameterKind::kMixed;
  if (is_isometric(t, tol.inclusion)) {
    kind = ParameterKind::kIsometric;
  } else if (top < 1.0 - tol.inclusion) {
    kind = ParameterKind::kStrictlyContractive;
  }
  return ContractionParameter{z, std::move(t), kind};
}

ContractionParameter parameter_from_matrix(const DefectData& dd, const Matrix& coeffs,
                                           const Tolerances& tol) {
  if (coeffs.rows() != dd.n_zbar.dim() || coeffs.cols() != dd.n_z.dim()) {
    throw ParameterShapeViolation("coefficient matrix must be dim N_conj(z) x dim N_z");
  }
  return make_parameter(dd.z, DomainOperator(dd.n_z, dd.n_zbar.frame() * coeffs), tol);
}

ExtensionReport extend(const DomainOperator& a, const ContractionParameter& param,
                       const Tolerances& tol) {
  const Complex z = param.z;
  const DomainOperator& t = param.t;
  const AdmissibilityResult adm = is_admissible(a, z, t, tol);
  if (!adm.admissible) {
    throw NotAdmissible("parameter is not admissible: U_z(A) (+) T has a fixed vector", *adm.witness);
  }

  const Eigen::Index d = a.ambient_dim();
  const Eigen::Index k = a.domain_dim() + t.domain_dim();
  Matrix xs(d, k), ys(d, k);
  const Matrix& ft = t.domain().frame();
  xs << a.domain().frame(), t.action() - ft;
  ys << a.action(), z * t.action() - std::conj(z) * ft;
  DomainOperator b = operator_from_pairs(xs, ys, tol.rank);
  if (b.domain_dim() != k) throw NotAdmissible("extension domain is not a direct sum", Vector());

  ExtensionReport report{b, param, classify(b, tol), is_injective(b, tol.rank),
                         defect_numbers(b, z, tol), std::nullopt};
  if (!report.invertible) {
    Vector v = b.domain().frame() * smallest_right_singular_vector(b.action());
    report.kernel_witness = phase_normalized(v / v.norm());
  }
  return report;
}

ContractionParameter recover_parameter(const DomainOperator& a, const DomainOperator& b, Complex z,
                                       const Tolerances& tol) {
  require_nonreal(z, tol);
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("operators live in different spaces");
  if (!graph_contains(b, a, tol.inclusion)) throw NotAnExtension("graph(A) is not inside graph(B)");

  const DefectData dd = defect_data(a, z, tol);
  const Matrix& fb = b.domain().frame();
  const Matrix shifted = b.action() - z * fb;
  const Subspace range = orthonormalize(shifted, tol.rank);
  Subspace dom = intersect(dd.n_z, range, tol.rank);
  const Eigen::Index d = a.ambient_dim();
  if (dom.dim() == 0) return make_parameter(z, DomainOperator(Subspace(d), Matrix(d, 0)), tol);

  const Matrix coeffs = shifted.completeOrthogonalDecomposition().solve(dom.frame());
  Matrix images = (b.action() - std::conj(z) * fb) * coeffs;
  return make_parameter(z, DomainOperator(std::move(dom), std::move(images)), tol);
}

Classification classify(const DomainOperator& b, const Tolerances& tol) {
  const Matrix form = b.form();
  if (is_hermitian(form, tol.rank)) {
    if (b.is_total()) return Classification::kSelfAdjoint;
    return Classification::kSymmetric;
  }
  const Matrix imag_part = (form - form.adjoint()) / Complex(0.0, 2.0);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(imag_part, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, form.norm());
  const auto& ev = eig.eigenvalues();
  if (ev.minCoeff() >= -tol.rank * scale) return Classification::kDissipative;
  if (ev.maxCoeff() <= tol.rank * scale) return Classification::kAccumulative;
  return Classification::kIndefinite;
}

Classification classify(const ExtensionReport& report, const Tolerances& tol) {
  return classify(report.b, tol);
}

}  // namespace symext
