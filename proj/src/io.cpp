// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "symext/errors.hpp"

namespace symext::io {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"frame", to_json(s.frame())}};
}

Json to_json(const Tolerances& tol) {
  return Json{{"rank", tol.rank}, {"inclusion", tol.inclusion}, {"real_axis", tol.real_axis}, {"margin", tol.margin}};
}

Json to_json(const DomainOperator& op) {
  return Json{{"ambient_dim", op.ambient_dim()},
              {"domain_dim", op.domain_dim()},
              {"domain_frame", to_json(op.domain().frame())},
              {"action", to_json(op.action())}};
}

Json operator_document(const DomainOperator& op) {
  Json j{{"schema", kSchemaVersion}, {"kind", "operator"}};
  j.update(to_json(op));
  return j;
}

Json to_json(const DefectData& dd) {
  const auto [n, m] = dd.defect_numbers();
  return Json{{"z", to_json(dd.z)},
              {"defect_numbers", {n, m}},
              {"m_z", to_json(dd.m_z)},
              {"n_z", to_json(dd.n_z)},
              {"m_zbar", to_json(dd.m_zbar)},
              {"n_zbar", to_json(dd.n_zbar)}};
}

Json to_json(const ExtensionReport& report, const Tolerances& tol) {
  Json j{{"schema", kSchemaVersion},
         {"kind", "extension_report"},
         {"z", to_json(report.parameter.z)},
         {"parameter", to_json(report.parameter.t)},
         {"parameter_kind", std::string(to_string(report.parameter.kind))},
         {"classification", std::string(to_string(report.classification))},
         {"invertible", report.invertible},
         {"defect_numbers_of_b", {report.defect_numbers_of_b.first, report.defect_numbers_of_b.second}},
         {"b", to_json(report.b)}};
  j["kernel_witness"] = report.kernel_witness ? vector_to_json(*report.kernel_witness) : Json(nullptr);
  j["tolerances"] = to_json(tol);
  return j;
}

Json to_json(const InvertibilityVerdict& v, const Tolerances& tol) {
  Json j{{"schema", kSchemaVersion},
         {"kind", "invertibility_verdict"},
         {"direct", v.direct},
         {"via_admissibility", v.via_admissibility},
         {"via_forbidden", v.via_forbidden},
         {"agree", v.agree},
         {"direct_margin", v.direct_margin},
         {"admissibility_margin", v.admissibility_margin},
         {"forbidden_margin", v.forbidden_margin}};
  j["witness"] = v.witness ? vector_to_json(*v.witness) : Json(nullptr);
  j["tolerances"] = to_json(tol);
  return j;
}

Json to_json(const ExtensionChain& chain, const Tolerances& tol) {
  Json steps = Json::array();
  for (const auto& s : chain.steps) {
    steps.push_back(Json{{"f1", vector_to_json(s.f1)},
                         {"h", vector_to_json(s.h)},
                         {"defect_numbers", {s.defect_numbers.first, s.defect_numbers.second}},
                         {"forbidden_distance", s.forbidden_distance},
                         {"operator", to_json(s.extension)}});
  }
  return Json{{"schema", kSchemaVersion},
              {"kind", "extension_chain"},
              {"z", to_json(chain.z)},
              {"seed", chain.seed},
              {"doubled", chain.doubled},
              {"base_dim", chain.base_dim},
              {"exit_dim", chain.exit_dim},
              {"start", to_json(chain.start)},
              {"steps", std::move(steps)},
              {"final", to_json(chain.final_op)},
              {"tolerances", to_json(tol)}};
}

Json to_json(const IAdmissibilityVerdict& v) {
  Json j{{"admissible", v.admissible},
         {"forbidden_domain_dim", v.forbidden_domain_dim},
         {"kernel_dim", v.kernel_dim},
         {"limit_estimate", to_json(v.limit_estimate)},
         {"rate_estimates", v.rate_estimates},
         {"limit_residual", v.limit_residual},
         {"ray_spread", v.ray_spread},
         {"rays_agree", v.rays_agree}};
  j["witness"] = v.witness ? vector_to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const InstanceSpec& spec) {
  return Json{{"dim", spec.dim},
              {"defect", spec.defect},
              {"dense_range", spec.dense_range},
              {"spectrum_window", {spec.window_lo, spec.window_hi}},
              {"seed", spec.seed}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex number must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array()) throw ParseError("matrix must be a nested array");
  const auto r = static_cast<Eigen::Index>(j.size());
  if (rows >= 0 && r != rows) throw ParseError("matrix has the wrong number of rows");
  if (r == 0) return Matrix(0, std::max<Eigen::Index>(cols, 0));
  if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
  const auto c = static_cast<Eigen::Index>(j[0].size());
  if (cols >= 0 && c != cols) throw ParseError("matrix has the wrong number of columns");
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) throw ParseError("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Eigen::Index index_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

Subspace checked_subspace(Matrix frame) {
  try {
    return Subspace(std::move(frame));
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("frame is not orthonormal: ") + e.what());
  }
}

}  // namespace

Subspace subspace_from_json(const Json& j) {
  const Eigen::Index d = index_field(j, "ambient_dim");
  return checked_subspace(matrix_from_json(field(j, "frame"), d));
}

Tolerances tolerances_from_json(const Json& j, Tolerances base) {
  if (j.is_null()) return base;
  auto read = [&](const char* key, double& slot) {
    if (!j.contains(key)) return;
    const double v = j.at(key).get<double>();
    if (!(v > 0.0)) throw ParseError(std::string("tolerance '") + key + "' must be positive");
    slot = v;
  };
  read("rank", base.rank);
  read("inclusion", base.inclusion);
  read("real_axis", base.real_axis);
  read("margin", base.margin);
  return base;
}

DomainOperator operator_from_json(const Json& j) {
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) throw ParseError("unsupported schema version");
  const Eigen::Index d = index_field(j, "ambient_dim");
  Matrix frame = matrix_from_json(field(j, "domain_frame"), d);
  const Eigen::Index k = frame.cols();
  if (k > d) throw ParseError("domain frame has more columns than rows");
  Matrix action = matrix_from_json(field(j, "action"), d, k);
  return DomainOperator(checked_subspace(std::move(frame)), std::move(action));
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

void write_grid_csv(std::ostream& out, const std::vector<std::pair<Complex, Matrix>>& grid) {
  const Eigen::Index rows = grid.empty() ? 0 : grid.front().second.rows();
  const Eigen::Index cols = grid.empty() ? 0 : grid.front().second.cols();
  out << "lambda_re,lambda_im";
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) out << ",r_" << i << '_' << j << "_re,r_" << i << '_' << j << "_im";
  }
  out << '\n' << std::setprecision(17);
  for (const auto& [lambda, r] : grid) {
    out << lambda.real() << ',' << lambda.imag();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      for (Eigen::Index j = 0; j < r.cols(); ++j) out << ',' << r(i, j).real() << ',' << r(i, j).imag();
    }
    out << '\n';
  }
}

}  // namespace symext::io
