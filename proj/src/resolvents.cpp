// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/resolvents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symext/errors.hpp"

namespace symext {
namespace {

bool same_half_plane(Complex a, Complex b) { return (a.imag() > 0.0) == (b.imag() > 0.0); }

// P_H L and P_H Atilde L for the frame of L_lambda, after the degeneracy check.
struct LPair {
  Matrix projected;  // d x d
  Matrix image;      // d x d
};

LPair l_pair(const EmbeddedExtension& e, Complex lambda, const Tolerances& tol) {
  const Subspace l = script_l(e, lambda, tol);
  const Eigen::Index d = e.base_dim();
  if (l.dim() != d) {
    throw ProjectionDegenerate("L_lambda has dimension different from dim H");
  }
  LPair out{e.embed.adjoint() * l.frame(), e.embed.adjoint() * (e.atilde * l.frame())};
  if (d > 0 && min_singular_value(out.projected) <= tol.rank) {
    throw ProjectionDegenerate("P_H restricted to L_lambda is not injective");
  }
  return out;
}

}  // namespace

EmbeddedExtension EmbeddedExtension::unchecked(DomainOperator a, Matrix atilde) {
  const Eigen::Index d = a.ambient_dim();
  const Eigen::Index total = atilde.rows();
  if (atilde.cols() != total || total < d) throw DimensionMismatch("Atilde must be square and at least dim H");
  Matrix embed = Matrix::Identity(total, d);
  return EmbeddedExtension{std::move(a), std::move(atilde), std::move(embed), total - d};
}

EmbeddedExtension EmbeddedExtension::make(DomainOperator a, Matrix atilde, const Tolerances& tol) {
  EmbeddedExtension e = unchecked(std::move(a), std::move(atilde));
  if (!is_hermitian(e.atilde, tol.inclusion)) throw NotAnExtension("Atilde is not Hermitian");
  if (e.containment_residual() > tol.inclusion) throw NotAnExtension("Atilde does not extend A");
  return e;
}

double EmbeddedExtension::hermiticity_residual() const {
  return (atilde - atilde.adjoint()).norm() / std::max(1.0, atilde.norm());
}

double EmbeddedExtension::containment_residual() const {
  const DomainOperator lifted = embed_operator(a, embed);
  const DomainOperator full(Subspace::full(total_dim()), atilde);
  return graph_excess(graph(lifted), graph(full));
}

EmbeddedExtension EmbeddedExtension::inverse(const Tolerances& tol) const {
  if (total_dim() > 0 && min_singular_value(atilde) <= tol.rank * max_singular_value(atilde)) {
    throw NotInvertible("Atilde is singular");
  }
  DomainOperator a_inv = inverse_op(a, tol.rank);
  Matrix inv = atilde.partialPivLu().inverse();
  return EmbeddedExtension{std::move(a_inv), std::move(inv), embed, exit_dim};
}

Matrix compressed_resolvent(const EmbeddedExtension& e, Complex lambda, const Tolerances& tol) {
  const Matrix shifted = e.atilde - lambda * Matrix::Identity(e.total_dim(), e.total_dim());
  if (min_singular_value(shifted) <= tol.rank * std::max(1.0, max_singular_value(shifted))) {
    throw SpectrumHit("lambda is an eigenvalue of Atilde");
  }
  return e.embed.adjoint() * shifted.partialPivLu().solve(e.embed);
}

Subspace script_l(const EmbeddedExtension& e, Complex lambda, const Tolerances& tol) {
  const Eigen::Index total = e.total_dim();
  if (e.exit_dim == 0) return Subspace::full(total);
  const Matrix shifted = e.atilde - lambda * Matrix::Identity(total, total);
  const Matrix exit_rows = shifted.bottomRows(e.exit_dim);
  return Subspace(null_space(exit_rows, tol.rank));
}

DomainOperator frak_b(const EmbeddedExtension& e, Complex lambda, const Tolerances& tol) {
  const LPair lp = l_pair(e, lambda, tol);
  const Eigen::Index d = e.base_dim();
  if (d == 0) return DomainOperator(Subspace(0), Matrix(0, 0));
  Subspace domain = orthonormalize(lp.projected, tol.rank);
  const Matrix coords = domain.frame().adjoint() * lp.projected;
  Matrix action = lp.image * coords.inverse();
  return DomainOperator(std::move(domain), std::move(action));
}

Matrix frak_f(const EmbeddedExtension& e, Complex lambda, Complex lambda0, const Tolerances& tol) {
  require_nonreal(lambda0, tol);
  require_nonreal(lambda, tol);
  if (!same_half_plane(lambda, lambda0)) {
    throw PreconditionViolation("frak_f needs lambda in the half-plane of lambda0");
  }
  const DefectData dd = defect_data(e.a, lambda0, tol);
  if (dd.n_z.dim() == 0) return Matrix(dd.n_zbar.dim(), 0);
  const LPair lp = l_pair(e, lambda, tol);
  // Graph of the Cayley quotient: ((B - l0) u, (B - conj l0) u) for u = P_H h.
  const Matrix from = lp.image - lambda0 * lp.projected;
  const Matrix to = lp.image - std::conj(lambda0) * lp.projected;
  const Matrix coeffs = from.partialPivLu().solve(dd.n_z.frame());
  return dd.n_zbar.frame().adjoint() * (to * coeffs);
}

ParameterFunction::ParameterFunction(Complex lambda0, DefectData frames, Sampler sampler,
                                     Provenance provenance)
    : lambda0_(lambda0), frames_(std::move(frames)), sampler_(std::move(sampler)), provenance_(provenance) {}

ParameterFunction ParameterFunction::constant(const DomainOperator& a, Complex lambda0, Matrix value,
                                              const Tolerances& tol) {
  DefectData dd = defect_data(a, lambda0, tol);
  if (value.rows() != dd.n_zbar.dim() || value.cols() != dd.n_z.dim()) {
    throw ParameterShapeViolation("constant parameter must be dim N_conj(l0) x dim N_l0");
  }
  return ParameterFunction(lambda0, std::move(dd), [value](Complex) { return value; },
                           Provenance::kConstant);
}

ParameterFunction ParameterFunction::from_extension(const EmbeddedExtension& e, Complex lambda0,
                                                    const Tolerances& tol) {
  return ParameterFunction(lambda0, defect_data(e.a, lambda0, tol),
                           [e, lambda0, tol](Complex lambda) { return frak_f(e, lambda, lambda0, tol); },
                           Provenance::kFromExtension);
}

ParameterFunction ParameterFunction::from_samples(const DomainOperator& a, Complex lambda0,
                                                  std::vector<std::pair<Complex, Matrix>> samples,
                                                  const Tolerances& tol) {
  DefectData dd = defect_data(a, lambda0, tol);
  for (const auto& [lambda, m] : samples) {
    if (m.rows() != dd.n_zbar.dim() || m.cols() != dd.n_z.dim()) {
      throw ParameterShapeViolation("sample has the wrong shape");
    }
  }
  auto lookup = [samples = std::move(samples)](Complex lambda) -> Matrix {
    for (const auto& [at, m] : samples) {
      if (std::abs(at - lambda) <= 1e-12 * std::max(1.0, std::abs(lambda))) return m;
    }
    throw PreconditionViolation("parameter function has no sample at the requested point");
  };
  return ParameterFunction(lambda0, std::move(dd), std::move(lookup), Provenance::kUser);
}

DomainOperator ParameterFunction::as_operator(Complex lambda) const {
  return DomainOperator(frames_.n_z, frames_.n_zbar.frame() * (*this)(lambda));
}

Matrix shtraus_resolvent(const DomainOperator& a, const ParameterFunction& f, Complex lambda,
                         const Tolerances& tol) {
  require_nonreal(lambda, tol);
  const Complex l0 = f.lambda0();
  const DefectData& dd = f.frames();
  const Eigen::Index d = a.ambient_dim();

  std::optional<ContractionParameter> param;
  if (same_half_plane(lambda, l0)) {
    param = make_parameter(l0, f.as_operator(lambda), tol);
  } else {
    // Adjoint branch: F*(conj lambda) maps N_conj(l0) back to N_l0.
    const Matrix sample = f(std::conj(lambda));
    param = make_parameter(std::conj(l0), DomainOperator(dd.n_zbar, dd.n_z.frame() * sample.adjoint()), tol);
  }
  const DomainOperator b = extend(a, *param, tol).b;
  if (!b.is_total()) throw PreconditionViolation("A_F is not total; parameter domain must be all of N_l0");
  const Matrix shifted = b.full_matrix() - lambda * Matrix::Identity(d, d);
  if (min_singular_value(shifted) <= tol.rank * std::max(1.0, max_singular_value(shifted))) {
    throw ResolventSingular("A_F - lambda is singular");
  }
  return shifted.partialPivLu().inverse();
}

SectorSpec SectorSpec::default_for(Complex lambda0) {
  SectorSpec s;
  s.half_plane_sign = lambda0.imag() > 0.0 ? 1 : -1;
  s.epsilon = std::numbers::pi / 6.0;
  for (double theta : {std::numbers::pi / 3.0, std::numbers::pi / 2.0, 2.0 * std::numbers::pi / 3.0}) {
    s.ray_angles.push_back(s.half_plane_sign * theta);
  }
  const double scale = std::abs(lambda0);
  for (int k = 2; k <= 6; ++k) s.radii.push_back(scale * std::pow(10.0, -k));
  return s;
}

void SectorSpec::validate() const {
  if (half_plane_sign != 1 && half_plane_sign != -1) throw PreconditionViolation("half_plane_sign must be +1 or -1");
  if (!(epsilon > 0.0 && epsilon < std::numbers::pi / 2.0)) throw PreconditionViolation("epsilon must be in (0, pi/2)");
  if (ray_angles.empty()) throw PreconditionViolation("sector needs at least one ray");
  for (double theta : ray_angles) {
    const double mag = std::abs(theta);
    if (!(mag > epsilon && mag < std::numbers::pi - epsilon) || (std::sin(theta) > 0.0) != (half_plane_sign > 0)) {
      throw PreconditionViolation("ray angle outside the sector");
    }
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] < radii[i - 1]))) {
      throw PreconditionViolation("radii must be positive and strictly decreasing");
    }
  }
}

IAdmissibilityVerdict i_admissibility_test(const DomainOperator& a, const ParameterFunction& f,
                                           const SectorSpec& sector, const IAdmissibilityOptions& options,
                                           const Tolerances& tol) {
  if (sector.radii.size() < 4) throw InsufficientSamples("need at least 4 radii");
  sector.validate();
  const Complex l0 = f.lambda0();
  if ((l0.imag() > 0.0) != (sector.half_plane_sign > 0)) {
    throw PreconditionViolation("sector is not in the half-plane of lambda0");
  }

  IAdmissibilityVerdict verdict;
  const ForbiddenOperator x = forbidden_operator(inverse_op(a, tol.rank), 1.0 / l0, tol);
  verdict.forbidden_domain_dim = x.domain.dim();
  if (x.domain.dim() == 0) return verdict;
  if (!x.single_valued) throw PreconditionViolation("forbidden relation of A^-1 is multivalued");

  const DefectData& dd = f.frames();
  const Matrix& nz = dd.n_z.frame();
  const Matrix& nzbar = dd.n_zbar.frame();
  const Eigen::Index n = nz.cols();
  const std::size_t rays = sector.ray_angles.size();
  const std::size_t nr = sector.radii.size();

  // samples[ray][radius]
  std::vector<std::vector<Matrix>> samples(rays);
  std::vector<Matrix> limits;
  for (std::size_t k = 0; k < rays; ++k) {
    for (double r : sector.radii) samples[k].push_back(f(std::polar(r, sector.ray_angles[k])));
    // Neville extrapolation to r = 0 from the four smallest radii.
    std::vector<Matrix> p(samples[k].end() - 4, samples[k].end());
    std::vector<double> rr(sector.radii.end() - 4, sector.radii.end());
    for (int m = 1; m < 4; ++m) {
      for (int i = 0; i + m < 4; ++i) {
        p[i] = (rr[i] * p[i + 1] - rr[i + m] * p[i]) / (rr[i] - rr[i + m]);
      }
    }
    limits.push_back(p[0]);
  }
  verdict.limit_estimate = Matrix::Zero(n, n);
  for (const auto& l : limits) verdict.limit_estimate += l / static_cast<double>(rays);
  for (std::size_t i = 0; i < rays; ++i) {
    for (std::size_t j = i + 1; j < rays; ++j) {
      verdict.ray_spread = std::max(verdict.ray_spread, max_singular_value(limits[i] - limits[j]));
    }
  }
  verdict.rays_agree = verdict.ray_spread <= options.ray_agreement;

  // (F(0+) - (conj l0 / l0) X) psi = 0 over psi in D(X), on every ray.
  const Complex c = std::conj(l0) / l0;
  const Matrix& dx = x.op->domain().frame();
  const Matrix p_coords = nz.adjoint() * dx;
  const Matrix q_coords = nzbar.adjoint() * x.op->action();
  const Eigen::Index m = dx.cols();
  Matrix system(static_cast<Eigen::Index>(n * rays), m);
  for (std::size_t k = 0; k < rays; ++k) {
    system.middleRows(static_cast<Eigen::Index>(k) * n, n) = limits[k] * p_coords - c * q_coords;
  }
  const Matrix kernel = null_space(system, options.kernel_tol);
  verdict.kernel_dim = kernel.cols();
  if (kernel.cols() == 0) return verdict;

  // Order kernel directions by how close F(0+) is to isometric on them.
  const Matrix psi_coords = p_coords * kernel;  // N-frame coordinates
  const Matrix defect_form = psi_coords.adjoint() *
                             (Matrix::Identity(n, n) - verdict.limit_estimate.adjoint() * verdict.limit_estimate) *
                             psi_coords;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(Matrix(0.5 * (defect_form + defect_form.adjoint())));

  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    const Vector mix = eig.eigenvectors().col(j);
    const Vector coords = kernel * mix;
    const Vector psi = dx * coords;
    const Vector p = nz.adjoint() * psi;
    const double psi_norm = psi.norm();

    std::vector<double> per_ray(rays);
    double worst_small = -std::numeric_limits<double>::infinity();
    for (std::size_t idx = nr - 2; idx < nr; ++idx) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < rays; ++k) {
        const double value = (psi_norm - (samples[k][idx] * p).norm()) / sector.radii[idx];
        best = std::min(best, value);
        per_ray[k] = idx == nr - 2 ? value : std::min(per_ray[k], value);
      }
      worst_small = std::max(worst_small, best);
    }
    double residual = 0.0;
    for (std::size_t k = 0; k < rays; ++k) {
      residual = std::max(residual, (system.middleRows(static_cast<Eigen::Index>(k) * n, n) * coords).norm());
    }

    if (j == 0) {
      verdict.rate_estimates = per_ray;
      verdict.limit_residual = residual;
    }
    if (worst_small < options.rate_bound) {
      verdict.admissible = false;
      verdict.witness = phase_normalized(psi / psi_norm);
      verdict.rate_estimates = per_ray;
      verdict.limit_residual = residual;
      break;
    }
  }
  return verdict;
}

std::vector<Complex> default_grid(Complex lambda0, const Matrix* atilde) {
  std::vector<Complex> eigenvalues;
  if (atilde != nullptr && atilde->size() > 0) {
    Eigen::ComplexEigenSolver<Matrix> eig(*atilde, false);
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) eigenvalues.push_back(eig.eigenvalues()(i));
  }
  const double scale = std::abs(lambda0.imag());
  std::vector<Complex> grid;
  for (double rho : {0.3, 0.9}) {
    for (int j = 0; j < 12; ++j) {
      const Complex lambda = lambda0 + std::polar(rho * scale, 2.0 * std::numbers::pi * j / 12.0);
      bool keep = true;
      for (const Complex& mu : eigenvalues) {
        if (std::abs(lambda - mu) < 1e-6) keep = false;
        if (std::abs(mu) > 0.0 && std::abs(1.0 / lambda - 1.0 / mu) < 1e-6) keep = false;
      }
      if (keep) grid.push_back(lambda);
    }
  }
  return grid;
}

}  // namespace symext
