// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "symext/errors.hpp"
#include "symext/instances.hpp"
#include "symext/neumann.hpp"

using namespace symext;

namespace {

const Complex kI(0.0, 1.0);

ContractionParameter worked_parameter(Complex z, Complex c) {
  const Matrix e2 = oracle::e(2, 1);
  return make_parameter(z, DomainOperator(Subspace(e2), Matrix(c * e2)));
}

Matrix diag2(Complex a, Complex b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("worked example: unimodular c gives diag(1, i(c+1)/(c-1))") {
  for (int k = 1; k < 12; ++k) {
    const Complex c = std::polar(1.0, 2.0 * std::numbers::pi * k / 12.0);
    const ExtensionReport r = extend(worked_example(), worked_parameter(kI, c));
    const Complex b = kI * (c + 1.0) / (c - 1.0);
    CHECK(std::abs(b.imag()) < 1e-12);
    CHECK(r.b.is_total());
    CHECK((r.b.full_matrix() - diag2(1.0, b)).norm() < 1e-12);
    CHECK(r.classification == Classification::kSelfAdjoint);
    CHECK(r.parameter.kind == ParameterKind::kIsometric);
  }
}

TEST_CASE("worked example: c = -1 gives diag(1, 0), not invertible") {
  const ExtensionReport r = extend(worked_example(), worked_parameter(kI, -1.0));
  CHECK((r.b.full_matrix() - diag2(1.0, 0.0)).norm() < 1e-12);
  CHECK(r.classification == Classification::kSelfAdjoint);
  CHECK_FALSE(r.invertible);
  REQUIRE(r.kernel_witness.has_value());
  CHECK((*r.kernel_witness - Vector(oracle::e(2, 1))).norm() < 1e-12);
}

TEST_CASE("empty parameter reproduces A") {
  const DomainOperator a = gen_symmetric(InstanceSpec{4, 2, false, 0.5, 2.0, 3});
  const ExtensionReport r = extend(a, make_parameter(kI, DomainOperator(Subspace(4), Matrix(4, 0))));
  CHECK(graph_distance(r.b, a) < 1e-12);
  CHECK(r.classification == Classification::kSymmetric);
}

TEST_CASE("c = 1 is rejected with witness e2") {
  try {
    extend(worked_example(), worked_parameter(kI, 1.0));
    FAIL("expected NotAdmissible");
  } catch (const NotAdmissible& e) {
    CHECK((e.witness() - Vector(oracle::e(2, 1))).norm() < 1e-12);
  }
}

TEST_CASE("strict contraction at z = -i is dissipative") {
  std::mt19937_64 rng(4);
  for (Complex c : {Complex(0.5, 0.0), Complex(0.0, 0.3), Complex(-0.2, 0.6)}) {
    const ExtensionReport r = extend(worked_example(), worked_parameter(-kI, c));
    CHECK(r.classification == Classification::kDissipative);
    CHECK(r.parameter.kind == ParameterKind::kStrictlyContractive);
    const Matrix b = r.b.full_matrix();
    for (int s = 0; s < 20; ++s) {
      const Vector v = oracle::gaussian(2, 1, rng);
      CHECK((v.adjoint() * b * v)(0, 0).imag() >= -1e-12);
    }
    // Same contraction at z = +i flips the sign.
    CHECK(classify(extend(worked_example(), worked_parameter(kI, c))) == Classification::kAccumulative);
  }
}

TEST_CASE("recover_parameter on the worked example") {
  for (double b : {-3.0, -0.5, 0.0, 0.7, 2.0}) {
    const DomainOperator bop(Subspace::full(2), diag2(1.0, b));
    const ContractionParameter t = recover_parameter(worked_example(), bop, kI);
    const Complex c = (b + kI) / (b - kI);
    CHECK(t.t.domain_dim() == 1);
    const Vector e2 = oracle::e(2, 1);
    CHECK((t.t.apply(e2) - c * e2).norm() < 1e-12);
  }
  const ContractionParameter none = recover_parameter(worked_example(), worked_example(), kI);
  CHECK(none.t.domain_dim() == 0);
  const DomainOperator unrelated(Subspace::full(2), diag2(2.0, 1.0));
  CHECK_THROWS_AS(recover_parameter(worked_example(), unrelated, kI), NotAnExtension);
}

TEST_CASE("classification examples") {
  CHECK(classify(DomainOperator(Subspace::full(2), diag2(1.0, 5.0))) == Classification::kSelfAdjoint);
  // Isometric partial parameter on a defect-2 operator leaves defect (1,1).
  const DomainOperator a = gen_symmetric(InstanceSpec{4, 2, false, 0.5, 2.0, 8});
  const DefectData dd = defect_data(a, kI);
  const Matrix f = dd.n_z.frame().col(0);
  const Matrix h = dd.n_zbar.frame().col(1);
  const ExtensionReport r = extend(a, make_parameter(kI, DomainOperator(Subspace(f), h)));
  CHECK(r.classification == Classification::kSymmetric);
  CHECK(r.defect_numbers_of_b == std::make_pair(Eigen::Index{1}, Eigen::Index{1}));
}

TEST_CASE("Neumann formulas and round trips on random instances") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(seed % 7);
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(seed % 3) % d;
    const DomainOperator a = gen_symmetric(InstanceSpec{d, n, false, 0.5, 2.0, seed});
    const Complex z = random_nonreal(rng);
    const DefectData dd = defect_data(a, z);

    // Random parameter on a random subspace of N_z; unitary when the domain is full.
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(seed % static_cast<std::uint64_t>(n));
    const Matrix sub = dd.n_z.frame() * random_unitary(n, rng).leftCols(k);
    const bool iso = seed % 3 == 0;
    const Matrix img = dd.n_zbar.frame() * (iso ? Matrix(random_unitary(n, rng).leftCols(k))
                                                : random_matrix(n, k, 0.8, rng));
    const ContractionParameter p = make_parameter(z, DomainOperator(Subspace(sub), img));
    const ExtensionReport r = extend(a, p);

    // Formula: B(f + T psi - psi) = A f + z T psi - conj(z) psi.
    const Vector coeff_a = oracle::gaussian(a.domain_dim(), 1, rng);
    const Vector coeff_t = oracle::gaussian(k, 1, rng);
    const Vector f = a.domain().frame() * coeff_a;
    const Vector tpsi = img * coeff_t;
    const Vector psi = sub * coeff_t;
    const Vector lhs = r.b.apply(Vector(f + tpsi - psi), 1e-8);
    const Vector rhs = a.action() * coeff_a + z * tpsi - std::conj(z) * psi;
    CHECK((lhs - rhs).norm() < 1e-9 * std::max(1.0, rhs.norm()));

    CHECK(r.b.domain_dim() == a.domain_dim() + k);
    CHECK(graph_contains(r.b, a));
    CHECK(intersect(a.domain(), orthonormalize(Matrix(img - sub))).dim() == 0);
    if (iso && k == n) CHECK(r.defect_numbers_of_b == std::make_pair(Eigen::Index{0}, Eigen::Index{0}));

    const ContractionParameter back = recover_parameter(a, r.b, z);
    CHECK(graph_distance(back.t, p.t) < 1e-9);
    CHECK(graph_distance(extend(a, back).b, r.b) < 1e-9);
  }
}
