// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/invertibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "symext/errors.hpp"

namespace symext {

double InvertibilityVerdict::margin() const {
  return std::min({direct_margin, admissibility_margin, forbidden_margin});
}

namespace {

// Injectivity of T - c X on D(T) cap D(X) for a single-valued X, else the
// relation form: no nonzero f in D(T) with (f, T f / c) in X.
std::pair<bool, double> forbidden_test(const DomainOperator& t, const ForbiddenOperator& x, Complex c,
                                       const Tolerances& tol) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (t.domain_dim() == 0) return {true, kInf};
  if (x.single_valued) {
    const Subspace common = intersect(t.domain(), x.domain, tol.rank);
    if (common.dim() == 0) return {true, kInf};
    Matrix diff(t.ambient_dim(), common.dim());
    for (Eigen::Index j = 0; j < common.dim(); ++j) {
      const Vector v = common.frame().col(j);
      diff.col(j) = t.apply(v) - c * x.op->apply(v);
    }
    const double margin = min_singular_value(diff);
    return {margin > tol.rank, margin};
  }
  const Eigen::Index d = t.ambient_dim();
  Matrix pairs(2 * d, t.domain_dim());
  pairs << t.domain().frame(), t.action() / c;
  const Matrix& g = x.relation.graph().frame();
  const Matrix residual = pairs - g * (g.adjoint() * pairs);
  const double margin = min_singular_value(residual);
  return {margin > tol.rank, margin};
}

Vector random_unit(const Matrix& frame, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector coeffs(frame.cols());
  for (auto& c : coeffs) c = Complex(normal(rng), normal(rng));
  Vector v = frame * coeffs;
  return v / v.norm();
}

}  // namespace

InvertibilityVerdict check_invertibility(const DomainOperator& a, const ContractionParameter& param,
                                         const Tolerances& tol) {
  if (!is_injective(a, tol.rank)) throw NotInvertibleBase("base operator has a nontrivial kernel");
  const Complex z = param.z;
  const ExtensionReport report = extend(a, param, tol);

  InvertibilityVerdict v;
  v.direct = report.invertible;
  v.direct_margin = injectivity_margin(report.b);
  if (!v.direct) v.witness = report.kernel_witness;

  const DomainOperator a_inv = inverse_op(a, tol.rank);
  const Complex w = 1.0 / z;
  const AdmissibilityResult adm = is_admissible(a_inv, w, scale(param.t, z / std::conj(z)), tol);
  v.via_admissibility = adm.admissible;
  v.admissibility_margin = adm.margin;

  const ForbiddenOperator x = forbidden_operator(a_inv, w, tol);
  std::tie(v.via_forbidden, v.forbidden_margin) = forbidden_test(param.t, x, std::conj(z) / z, tol);

  v.agree = v.direct == v.via_admissibility && v.direct == v.via_forbidden;
  return v;
}

DomainOperator double_op(const DomainOperator& a) { return direct_sum_op(a, negate(a)); }

ExtensionChain build_invertible_selfadjoint(const DomainOperator& a, Complex z, std::uint64_t seed,
                                            const ChainOptions& options, const Tolerances& tol) {
  require_nonreal(z, tol);
  if (!is_symmetric(a, tol.rank)) throw PreconditionViolation("operator is not symmetric");
  if (!is_injective(a, tol.rank)) throw NotInvertibleBase("base operator has a nontrivial kernel");

  DomainOperator start = options.use_double ? double_op(a) : a;
  ExtensionChain chain{z, seed, options.use_double, a.ambient_dim(),
                       start.ambient_dim() - a.ambient_dim(), start, {}, start};
  std::mt19937_64 rng(seed);
  const Complex ratio = z / std::conj(z);
  const Eigen::Index d = start.ambient_dim();
  const int max_attempts = static_cast<int>(10 * d);

  DomainOperator current = start;
  for (;;) {
    const DefectData dd = defect_data(current, z, tol);
    const Eigen::Index n = dd.n_z.dim();
    if (n == 0) break;
    if (dd.n_zbar.dim() != n) throw PreconditionViolation("unequal defect numbers");

    const ForbiddenOperator x_direct = forbidden_operator(current, z, tol);
    const ForbiddenOperator x_inverse = forbidden_operator(inverse_op(current, tol.rank), 1.0 / z, tol);

    // Candidate directions for h, in a seed-dependent order.
    std::vector<Vector> candidates;
    const Matrix& nzbar = dd.n_zbar.frame();
    if (n == 1) {
      constexpr int kPhases = 64;
      for (int j = 0; j < kPhases; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / kPhases;
        candidates.emplace_back(nzbar.col(0) * std::polar(1.0, phi));
      }
    } else {
      for (Eigen::Index j = 0; j < n; ++j) candidates.emplace_back(nzbar.col(j));
      for (int j = 0; j < options.candidates; ++j) candidates.push_back(random_unit(nzbar, rng));
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);

    bool advanced = false;
    for (int attempt = 0; attempt < max_attempts && !advanced; ++attempt) {
      const Vector f1 = attempt < n ? Vector(dd.n_z.frame().col(attempt)) : random_unit(dd.n_z.frame(), rng);

      double best_score = -1.0;
      const Vector* best = nullptr;
      for (const auto& h : candidates) {
        const double score =
            std::min(x_direct.relation.distance(f1, h), x_inverse.relation.distance(f1, ratio * h));
        if (score > best_score + 1e-12) {
          best_score = score;
          best = &h;
        }
      }
      if (best == nullptr || best_score <= tol.margin) continue;

      Matrix f1_col = f1;
      Matrix h_col = *best;
      ContractionParameter param =
          make_parameter(z, DomainOperator(Subspace(std::move(f1_col)), std::move(h_col)), tol);
      try {
        ExtensionReport report = extend(current, param, tol);
        if (!report.invertible) continue;
        if (report.defect_numbers_of_b != std::make_pair(n - 1, n - 1)) continue;
        chain.steps.push_back(ChainStep{f1, *best, report.b, report.defect_numbers_of_b, best_score});
        current = std::move(report.b);
        advanced = true;
      } catch (const NotAdmissible&) {
        continue;
      }
    }
    if (!advanced) throw ChoiceExhausted("no admissible invertible rank-one step found");
  }

  if (!current.is_total() || !is_hermitian(current.full_matrix(), tol.rank)) {
    throw Error("chain did not terminate in a self-adjoint operator");
  }
  chain.final_op = std::move(current);
  return chain;
}

}  // namespace symext
