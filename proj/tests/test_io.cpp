// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "symext/errors.hpp"
#include "symext/io.hpp"

using namespace symext;
using io::Json;

TEST_CASE("complex numbers and matrices") {
  CHECK(io::to_json(Complex(1.5, -2.0)).dump() == "[1.5,-2.0]");
  CHECK(io::complex_from_json(Json::parse("[0.25, 3]")) == Complex(0.25, 3.0));
  CHECK_THROWS_AS(io::complex_from_json(Json::parse("[1, 2, 3]")), ParseError);
  Matrix m(2, 3);
  m << 1.0, Complex(0, 1), 2.0, 3.0, 4.0, Complex(-1, 0.5);
  const Json j = io::to_json(m);
  CHECK(j.size() == 2);
  CHECK(j[0].size() == 3);
  CHECK(j[0][1].dump() == "[0.0,1.0]");
  CHECK((io::matrix_from_json(j) - m).norm() == 0.0);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[[1,0]], [[1,0],[2,0]]]")), ParseError);
}

TEST_CASE("empty shapes survive a round trip") {
  const Matrix tall(3, 0);
  const Matrix back = io::matrix_from_json(io::to_json(tall), 3);
  CHECK(back.rows() == 3);
  CHECK(back.cols() == 0);
  const Matrix flat = io::matrix_from_json(Json::array(), 0, 2);
  CHECK(flat.rows() == 0);
  CHECK(flat.cols() == 2);
}

TEST_CASE("operator documents") {
  const DomainOperator a = gen_symmetric(InstanceSpec{4, 2, false, 0.5, 2.0, 3});
  const Json doc = io::operator_document(a);
  CHECK(doc.at("schema") == 1);
  const DomainOperator back = io::operator_from_json(Json::parse(doc.dump()));
  CHECK((back.domain().frame() - a.domain().frame()).norm() == 0.0);
  CHECK((back.action() - a.action()).norm() == 0.0);

  Json wrong = doc;
  wrong["schema"] = 2;
  CHECK_THROWS_AS(io::operator_from_json(wrong), ParseError);
  Json skewed = doc;
  skewed["domain_frame"][0][0] = Json::array({5.0, 0.0});
  CHECK_THROWS_AS(io::operator_from_json(skewed), ParseError);
  Json missing = doc;
  missing.erase("action");
  CHECK_THROWS_AS(io::operator_from_json(missing), ParseError);

  const DomainOperator zero(Subspace(2), Matrix(2, 0));
  CHECK(io::operator_from_json(io::operator_document(zero)).domain_dim() == 0);
}

TEST_CASE("reports embed tolerances and lowercase enums") {
  const Matrix e2 = oracle::e(2, 1);
  const ContractionParameter p = make_parameter(Complex(0, 1), DomainOperator(Subspace(e2), Matrix(Complex(0, 1) * e2)));
  const Json r = io::to_json(extend(worked_example(), p), kDefaultTolerances);
  CHECK(r.at("classification") == "self-adjoint");
  CHECK(r.at("invertible") == true);
  CHECK(r.at("tolerances").at("rank") == 1e-10);
  const Json v = io::to_json(check_invertibility(worked_example(), p), kDefaultTolerances);
  CHECK(v.at("agree") == true);
  CHECK(v.contains("tolerances"));
}

TEST_CASE("tolerance overrides") {
  const Tolerances t = io::tolerances_from_json(Json::parse(R"({"rank": 1e-12})"));
  CHECK(t.rank == 1e-12);
  CHECK(t.inclusion == kDefaultTolerances.inclusion);
  CHECK_THROWS_AS(io::tolerances_from_json(Json::parse(R"({"rank": -1})")), ParseError);
}

TEST_CASE("CSV grid layout") {
  std::ostringstream out;
  Matrix r(2, 2);
  r << 1.0, Complex(0, 2), 3.0, 4.0;
  io::write_grid_csv(out, {{Complex(0.5, 1.0), r}});
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header ==
        "lambda_re,lambda_im,r_0_0_re,r_0_0_im,r_0_1_re,r_0_1_im,r_1_0_re,r_1_0_im,r_1_1_re,r_1_1_im");
  CHECK(row == "0.5,1,1,0,0,2,3,0,4,0");
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/path.json"), IoError);
}
