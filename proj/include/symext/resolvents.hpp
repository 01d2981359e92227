// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Generalized resolvents of exit-space self-adjoint extensions, the
// L / B / F machinery that links them to Neumann parameters, Shtraus-formula
// evaluation, and a sampled test of the boundary condition at lambda -> 0
// that singles out resolvents generated by invertible extensions.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "symext/neumann.hpp"

namespace symext {

/// Atilde: a self-adjoint operator on C^(d+e) extending J A J^*, where J is
/// the isometric embedding of C^d.
struct EmbeddedExtension {
  DomainOperator a;
  Matrix atilde;  // (d+e) x (d+e)
  Matrix embed;   // (d+e) x d isometry
  Eigen::Index exit_dim = 0;

  /// Canonical embedding onto the first d coordinates; validates hermiticity
  /// and graph containment, throwing NotAnExtension otherwise.
  static EmbeddedExtension make(DomainOperator a, Matrix atilde,
                                const Tolerances& tol = kDefaultTolerances);
  /// Same, without validation (for auditing damaged inputs).
  static EmbeddedExtension unchecked(DomainOperator a, Matrix atilde);

  Eigen::Index base_dim() const noexcept { return embed.cols(); }
  Eigen::Index total_dim() const noexcept { return embed.rows(); }

  double hermiticity_residual() const;
  /// graph(J A) off graph(Atilde J).
  double containment_residual() const;

  /// (A^-1, Atilde^-1) with the same embedding; throws NotInvertible.
  EmbeddedExtension inverse(const Tolerances& tol = kDefaultTolerances) const;
};

/// P_H (Atilde - lambda)^-1 |_H. Throws SpectrumHit.
Matrix compressed_resolvent(const EmbeddedExtension& e, Complex lambda,
                            const Tolerances& tol = kDefaultTolerances);

/// {h : (Atilde - lambda) h in H}.
Subspace script_l(const EmbeddedExtension& e, Complex lambda, const Tolerances& tol = kDefaultTolerances);

/// P_H Atilde (P_H |_L)^-1 on P_H L. Throws ProjectionDegenerate.
DomainOperator frak_b(const EmbeddedExtension& e, Complex lambda, const Tolerances& tol = kDefaultTolerances);

/// (B_lambda - conj lambda0)(B_lambda - lambda0)^-1 restricted to N_lambda0(A),
/// as a matrix in the defect frames of A at lambda0 (rows: N_conj(lambda0)).
Matrix frak_f(const EmbeddedExtension& e, Complex lambda, Complex lambda0,
              const Tolerances& tol = kDefaultTolerances);

enum class Provenance { kConstant, kFromExtension, kUser };

/// A lambda-sampled family of contractions N_lambda0 -> N_conj(lambda0),
/// given as matrices in the defect frames of A at lambda0. Holomorphy is not
/// checked; only pointwise values are used.
class ParameterFunction {
 public:
  using Sampler = std::function<Matrix(Complex)>;

  ParameterFunction(Complex lambda0, DefectData frames, Sampler sampler, Provenance provenance);

  static ParameterFunction constant(const DomainOperator& a, Complex lambda0, Matrix value,
                                    const Tolerances& tol = kDefaultTolerances);
  static ParameterFunction from_extension(const EmbeddedExtension& e, Complex lambda0,
                                          const Tolerances& tol = kDefaultTolerances);
  /// Looks up samples by exact lambda (within 1e-12); throws PreconditionViolation on a miss.
  static ParameterFunction from_samples(const DomainOperator& a, Complex lambda0,
                                        std::vector<std::pair<Complex, Matrix>> samples,
                                        const Tolerances& tol = kDefaultTolerances);

  Complex lambda0() const noexcept { return lambda0_; }
  const DefectData& frames() const noexcept { return frames_; }
  Provenance provenance() const noexcept { return provenance_; }

  Matrix operator()(Complex lambda) const { return sampler_(lambda); }
  /// The sample as an operator on C^d with domain N_lambda0.
  DomainOperator as_operator(Complex lambda) const;

 private:
  Complex lambda0_;
  DefectData frames_;
  Sampler sampler_;
  Provenance provenance_;
};

/// (A_{F(lambda)} - lambda)^-1 for lambda in the half-plane of lambda0, and
/// (A_{F*(conj lambda)} - lambda)^-1 for the conjugate half-plane.
/// Throws NotAdmissible, ResolventSingular or RealPoint.
Matrix shtraus_resolvent(const DomainOperator& a, const ParameterFunction& f, Complex lambda,
                         const Tolerances& tol = kDefaultTolerances);

struct SectorSpec {
  int half_plane_sign = 1;
  double epsilon = 0.0;
  std::vector<double> ray_angles;
  std::vector<double> radii;  // strictly decreasing

  /// epsilon = pi/6, rays at pi/3, pi/2, 2pi/3 (mirrored for the lower
  /// half-plane), radii |lambda0| * 10^-2 ... 10^-6.
  static SectorSpec default_for(Complex lambda0);
  /// Throws PreconditionViolation on an invalid sector.
  void validate() const;
};

struct IAdmissibilityOptions {
  double rate_bound = 1e3;
  double kernel_tol = 1e-6;
  double ray_agreement = 1e-6;
};

struct IAdmissibilityVerdict {
  bool admissible = true;
  std::optional<Vector> witness;         // psi in N_lambda0
  Matrix limit_estimate;                 // mean of the per-ray extrapolated limits
  std::vector<double> rate_estimates;    // per ray, for the witness (or first candidate)
  double limit_residual = 0.0;           // |(F(0+) - (conj l0 / l0) X) psi|, worst ray
  double ray_spread = 0.0;
  bool rays_agree = true;
  Eigen::Index forbidden_domain_dim = 0;
  Eigen::Index kernel_dim = 0;
};

/// Sampled version of: F(lambda) psi -> (conj l0 / l0) X_{1/l0}(A^-1) psi and
/// liminf (|psi| - |F(lambda) psi|) / |lambda| < inf as lambda -> 0 in the
/// sector imply psi = 0. Throws InsufficientSamples with fewer than 4 radii.
IAdmissibilityVerdict i_admissibility_test(const DomainOperator& a, const ParameterFunction& f,
                                           const SectorSpec& sector,
                                           const IAdmissibilityOptions& options = {},
                                           const Tolerances& tol = kDefaultTolerances);

/// 12 points on each of the circles |lambda - lambda0| = 0.3 |Im lambda0| and
/// 0.9 |Im lambda0|, skipping points within 1e-6 of the spectrum of `atilde`
/// (or of its inverse image).
std::vector<Complex> default_grid(Complex lambda0, const Matrix* atilde = nullptr);

}  // namespace symext
