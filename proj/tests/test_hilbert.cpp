// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "symext/errors.hpp"
#include "symext/hilbert.hpp"

using namespace symext;

namespace {

Matrix cols(std::initializer_list<std::initializer_list<Complex>> columns, Eigen::Index d) {
  Matrix m(d, static_cast<Eigen::Index>(columns.size()));
  Eigen::Index j = 0;
  for (const auto& c : columns) {
    Eigen::Index i = 0;
    for (const auto& x : c) m(i++, j) = x;
    ++j;
  }
  return m;
}

bool same_span(const Subspace& s, const Matrix& spanning) {
  return oracle::norm2(s.projector() - oracle::projector(spanning)) < 1e-10;
}

}  // namespace

TEST_CASE("orthonormalize drops collinear vectors") {
  const Subspace s = orthonormalize(cols({{1, 0}, {2, 0}}, 2), 1e-12);
  CHECK(s.dim() == 1);
  CHECK(same_span(s, oracle::e(2, 0)));
}

TEST_CASE("orthonormalize of nothing is the zero subspace") {
  const Subspace s = orthonormalize(Matrix(3, 0));
  CHECK(s.dim() == 0);
  CHECK(s.ambient_dim() == 3);
  const std::array<Vector, 0> none{};
  CHECK(orthonormalize(std::span<const Vector>(none), 2).dim() == 0);
}

TEST_CASE("orthonormalize keeps an orthonormal pair") {
  const double r = 1.0 / std::sqrt(2.0);
  const Subspace s = orthonormalize(cols({{r, r}, {r, -r}}, 2));
  CHECK(s.dim() == 2);
  CHECK((s.frame().adjoint() * s.frame() - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("project onto a line, the whole space and zero") {
  Vector v(2);
  v << 3.0, 4.0;
  Vector expected(2);
  expected << 3.0, 0.0;
  CHECK((project(Subspace(Matrix(oracle::e(2, 0))), v) - expected).norm() < 1e-14);
  CHECK((project(Subspace::full(2), v) - v).norm() < 1e-14);
  CHECK(project(Subspace(2), v).norm() == 0.0);
}

TEST_CASE("complement examples") {
  const Subspace c = complement(Subspace(Matrix(oracle::e(2, 0))));
  CHECK(same_span(c, oracle::e(2, 1)));
  CHECK(complement(Subspace::full(4)).dim() == 0);
  CHECK(complement(Subspace(3)).dim() == 3);
}

TEST_CASE("intersect examples") {
  Matrix a(3, 2), b(3, 2);
  a << oracle::e(3, 0), oracle::e(3, 1);
  b << oracle::e(3, 1), oracle::e(3, 2);
  const Subspace i = intersect(Subspace(a), Subspace(b));
  CHECK(i.dim() == 1);
  CHECK(same_span(i, oracle::e(3, 1)));
  CHECK(intersect(Subspace(a), Subspace(a)).dim() == 2);
  CHECK(intersect(Subspace(Matrix(oracle::e(2, 0))), Subspace(Matrix(oracle::e(2, 1)))).dim() == 0);
}

TEST_CASE("direct_sum_embed examples") {
  const std::array<Eigen::Index, 2> parts{2, 2};
  const DirectSumMaps maps = direct_sum_embed(parts);
  CHECK(maps.total_dim == 4);
  CHECK((maps.embeddings[0] * oracle::e(2, 0) - oracle::e(4, 0)).norm() == 0.0);
  CHECK((maps.embeddings[1] * oracle::e(2, 0) - oracle::e(4, 2)).norm() == 0.0);

  const std::array<Eigen::Index, 1> single{3};
  CHECK((direct_sum_embed(single).embeddings[0] - Matrix::Identity(3, 3)).norm() == 0.0);

  const std::array<Eigen::Index, 2> uneven{1, 3};
  const DirectSumMaps m2 = direct_sum_embed(uneven);
  for (int k = 0; k < 2; ++k) {
    const Eigen::Index dk = uneven[static_cast<std::size_t>(k)];
    CHECK((m2.projections[k] * m2.embeddings[k] - Matrix::Identity(dk, dk)).norm() == 0.0);
  }
  CHECK((m2.embeddings[0].adjoint() * m2.embeddings[1]).norm() == 0.0);
}

TEST_CASE("Subspace rejects non-orthonormal frames") {
  Matrix bad(2, 1);
  bad << 2.0, 0.0;
  CHECK_THROWS_AS(Subspace(bad, 1e-8), DimensionMismatch);
}

TEST_CASE("phase normalization makes the leading coordinate real positive") {
  Vector v(3);
  v << 0.0, Complex(0.0, -2.0), 1.0;
  const Vector w = phase_normalized(v);
  CHECK(std::abs(w(1).imag()) < 1e-15);
  CHECK(w(1).real() > 0.0);
  CHECK(std::abs(w.norm() - v.norm()) < 1e-14);
}

TEST_CASE("random invariants: projector, double complement, Grassmann identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index d = 2 + trial % 6;
    const Eigen::Index k1 = trial % (d + 1);
    const Eigen::Index k2 = (trial * 3) % (d + 1);
    // Share a random common part so intersections are nontrivial.
    const Eigen::Index shared = std::min<Eigen::Index>({k1, k2, trial % 3});
    const Matrix common = oracle::gaussian(d, shared, rng);
    Matrix g1(d, k1), g2(d, k2);
    g1 << common, oracle::gaussian(d, k1 - shared, rng);
    g2 << common, oracle::gaussian(d, k2 - shared, rng);
    const Subspace s1 = orthonormalize(g1);
    const Subspace s2 = orthonormalize(g2);

    const Matrix p = s1.projector();
    CHECK((p * p - p).norm() < 1e-10);
    CHECK((p - p.adjoint()).norm() < 1e-12);
    CHECK(subspace_distance(complement(complement(s1)), s1) < 1e-10);

    Matrix both(d, k1 + k2);
    both << g1, g2;
    const Eigen::Index sum_dim = oracle::rank(both);
    const Eigen::Index inter = oracle::rank(g1) + oracle::rank(g2) - sum_dim;
    CHECK(span_sum(s1, s2).dim() == sum_dim);
    CHECK(intersect(s1, s2).dim() == inter);
    CHECK(intersect(s1, s2).dim() + span_sum(s1, s2).dim() == s1.dim() + s2.dim());
  }
}

TEST_CASE("singular value helpers") {
  Matrix m = Matrix::Zero(3, 2);
  m(0, 0) = 2.0;
  m(1, 1) = 0.5;
  CHECK(min_singular_value(m) == doctest::Approx(0.5));
  CHECK(max_singular_value(m) == doctest::Approx(2.0));
  CHECK(std::isinf(min_singular_value(Matrix(3, 0))));
  Matrix sing = Matrix::Zero(2, 2);
  sing(0, 0) = 1.0;
  const Matrix ns = null_space(sing);
  CHECK(ns.cols() == 1);
  CHECK((sing * ns).norm() < 1e-14);
  CHECK(is_hermitian(Matrix::Identity(2, 2)));
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_FALSE(is_hermitian(skew));
}
