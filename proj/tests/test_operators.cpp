// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "symext/errors.hpp"
#include "symext/instances.hpp"
#include "symext/operators.hpp"

using namespace symext;

namespace {

DomainOperator diag_op(std::initializer_list<Complex> values) {
  const auto d = static_cast<Eigen::Index>(values.size());
  Vector v(d);
  Eigen::Index i = 0;
  for (Complex x : values) v(i++) = x;
  return DomainOperator(Subspace::full(d), Matrix(v.asDiagonal()));
}

DomainOperator line_op(Complex value) {
  const Matrix e1 = oracle::e(2, 0);
  return DomainOperator(Subspace(e1), Matrix(value * e1));
}

}  // namespace

TEST_CASE("make_operator examples") {
  const DomainOperator a = make_operator(Subspace(Matrix(oracle::e(2, 0))), oracle::e(2, 0));
  CHECK(a.domain_dim() == 1);
  const DomainOperator id = make_operator(Subspace::full(2), Matrix::Identity(2, 2));
  CHECK((id.full_matrix() - Matrix::Identity(2, 2)).norm() == 0.0);
  const DomainOperator zero = make_operator(Subspace(2), Matrix(2, 0));
  CHECK(zero.domain_dim() == 0);
  CHECK_THROWS_AS(make_operator(Subspace::full(2), Matrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("apply examples") {
  const DomainOperator a = worked_example();
  Vector v(2);
  v << 2.0, 0.0;
  CHECK((symext::apply(a, v) - v).norm() < 1e-15);
  Vector off(2);
  off << 0.0, 1.0;
  CHECK_THROWS_AS(symext::apply(a, off), DomainViolation);
  CHECK(symext::apply(a, Vector::Zero(2)).norm() == 0.0);
}

TEST_CASE("is_symmetric examples") {
  CHECK(is_symmetric(worked_example()));
  CHECK_FALSE(is_symmetric(line_op(Complex(0.0, 1.0))));
  std::mt19937_64 rng(1);
  const Matrix g = oracle::gaussian(4, 4, rng);
  CHECK(is_symmetric(DomainOperator(Subspace::full(4), Matrix(g + g.adjoint()))));
}

TEST_CASE("is_injective examples") {
  CHECK_FALSE(is_injective(diag_op({1.0, 0.0})));
  CHECK(is_injective(diag_op({1.0, 0.3})));
  CHECK(is_injective(DomainOperator(Subspace(3), Matrix(3, 0))));
}

TEST_CASE("inverse_op examples") {
  const DomainOperator a = worked_example();
  CHECK(graph_distance(inverse_op(a), a) < 1e-12);
  const DomainOperator inv = inverse_op(diag_op({2.0, 3.0}));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 0.5;
  expected(1, 1) = 1.0 / 3.0;
  CHECK((inv.full_matrix() - expected).norm() < 1e-14);
  CHECK_THROWS_AS(inverse_op(diag_op({1.0, 0.0})), NotInvertible);
}

TEST_CASE("isometric and non-expanding examples") {
  const Matrix e2 = oracle::e(2, 1);
  const DomainOperator minus(Subspace(e2), Matrix(-e2));
  const DomainOperator half(Subspace(e2), Matrix(0.5 * e2));
  const DomainOperator twice(Subspace(e2), Matrix(2.0 * e2));
  CHECK(is_isometric(minus));
  CHECK(is_nonexpanding(half));
  CHECK_FALSE(is_isometric(half));
  CHECK_FALSE(is_isometric(twice));
  CHECK_FALSE(is_nonexpanding(twice));
}

TEST_CASE("graph and relation_is_operator examples") {
  const LinearRelation g = graph(DomainOperator(Subspace::full(1), Matrix::Identity(1, 1)));
  CHECK(g.dim() == 1);
  const Complex r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(g.graph().frame()(0, 0)) - std::abs(r)) < 1e-14);
  CHECK(std::abs(std::abs(g.graph().frame()(1, 0)) - std::abs(r)) < 1e-14);

  Matrix vertical = Matrix::Zero(4, 1);
  vertical(2, 0) = 1.0;
  const LinearRelation v(2, Subspace(vertical));
  CHECK_FALSE(relation_is_operator(v));
  CHECK(v.multivalued_part().dim() == 1);
  CHECK(relation_is_operator(graph(worked_example())));
}

TEST_CASE("direct sum, restrict, compose") {
  const DomainOperator a = worked_example();
  const DomainOperator doubled = direct_sum_op(a, negate(a));
  Vector ff(4);
  ff << 1.0, 0.0, 1.0, 0.0;
  Vector expected(4);
  expected << 1.0, 0.0, -1.0, 0.0;
  CHECK((symext::apply(doubled, ff) - expected).norm() < 1e-14);
  CHECK(graph(doubled).dim() == 2);

  const DomainOperator inc = restrict(DomainOperator(Subspace::full(2), Matrix::Identity(2, 2)),
                                      Subspace(Matrix(oracle::e(2, 0))));
  CHECK(graph_distance(inc, a) < 1e-14);

  std::mt19937_64 rng(3);
  const DomainOperator g = gen_symmetric(InstanceSpec{5, 2, false, 0.5, 2.0, 11});
  const DomainOperator id_on_domain = compose(inverse_op(g), g);
  for (Eigen::Index j = 0; j < g.domain_dim(); ++j) {
    const Vector f = g.domain().frame().col(j);
    CHECK((symext::apply(id_on_domain, f) - f).norm() < 1e-10);
  }
}

TEST_CASE("random invariants: double inverse, sum dimension, A - lambda injective") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(seed % 7);
    const Eigen::Index n = static_cast<Eigen::Index>(seed % 3) % (d + 1);
    const DomainOperator a = gen_symmetric(InstanceSpec{d, n, false, 0.5, 2.0, seed});
    CHECK(graph_distance(inverse_op(inverse_op(a)), a) < 1e-10);
    CHECK(graph(direct_sum_op(a, a)).dim() == 2 * a.domain_dim());
    const Complex lambda = random_nonreal(rng);
    CHECK(is_injective(shift(a, lambda)));
    // Oracle: (A - lambda) f = 0 would need lambda real for symmetric A.
    const Matrix m = a.action() - lambda * a.domain().frame();
    CHECK(oracle::rank(m) == a.domain_dim());
  }
}

TEST_CASE("linear relation from pairs, inverse and distance") {
  Matrix xs(2, 1), ys(2, 1);
  xs << 1.0, 0.0;
  ys << 2.0, 0.0;
  const LinearRelation r = LinearRelation::from_pairs(xs, ys);
  CHECK(relation_is_operator(r));
  Vector x(2), y(2);
  x << 1.0, 0.0;
  y << 2.0, 0.0;
  CHECK(r.distance(x, y) < 1e-14);
  CHECK(r.distance(x, x) > 0.1);
  const DomainOperator inv = relation_to_operator(r.inverse());
  CHECK((symext::apply(inv, y) - x).norm() < 1e-14);
}
