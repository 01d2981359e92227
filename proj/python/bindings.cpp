// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// Python bindings. Matrices cross the boundary as complex numpy arrays.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symext/errors.hpp"
#include "symext/instances.hpp"
#include "symext/invertibility.hpp"
#include "symext/io.hpp"
#include "symext/resolvents.hpp"
#include "symext/verify.hpp"

namespace py = pybind11;
using namespace symext;

namespace {

py::dict defect_dict(const DefectData& dd) {
  py::dict out;
  out["z"] = dd.z;
  out["n_z"] = Matrix(dd.n_z.frame());
  out["n_zbar"] = Matrix(dd.n_zbar.frame());
  out["m_z"] = Matrix(dd.m_z.frame());
  out["m_zbar"] = Matrix(dd.m_zbar.frame());
  return out;
}

py::object optional_vector(const std::optional<Vector>& v) {
  return v ? py::cast(*v) : py::none();
}

Matrix coefficients_of(const DefectData& dd, const DomainOperator& t) {
  return dd.n_zbar.frame().adjoint() * t.full_matrix() * dd.n_z.frame();
}

}  // namespace

PYBIND11_MODULE(_symext, m) {
  m.doc() = "Symmetric extensions, invertibility tests and generalized resolvents";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<NotAdmissible>(m, "NotAdmissible", error);
  py::register_exception<NotAnExtension>(m, "NotAnExtension", error);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", error);
  py::register_exception<RealPoint>(m, "RealPoint", error);
  py::register_exception<SpecInfeasible>(m, "SpecInfeasible", error);
  py::register_exception<SpectrumHit>(m, "SpectrumHit", error);

  py::class_<DomainOperator>(m, "Operator")
      .def(py::init([](const Matrix& basis, const Matrix& images) { return operator_from_pairs(basis, images); }),
           py::arg("domain_basis"), py::arg("images"),
           "Operator mapping basis.col(j) to images.col(j); the basis need not be orthonormal.")
      .def_property_readonly("ambient_dim", &DomainOperator::ambient_dim)
      .def_property_readonly("domain_dim", &DomainOperator::domain_dim)
      .def_property_readonly("domain_frame", [](const DomainOperator& a) { return Matrix(a.domain().frame()); })
      .def_property_readonly("action", [](const DomainOperator& a) { return Matrix(a.action()); })
      .def("full_matrix", &DomainOperator::full_matrix)
      .def("apply", [](const DomainOperator& a, const Vector& v) { return a.apply(v); })
      .def("to_json", [](const DomainOperator& a) { return io::operator_document(a).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::operator_from_json(io::Json::parse(s)); })
      .def("__repr__", [](const DomainOperator& a) {
        return "<Operator ambient_dim=" + std::to_string(a.ambient_dim()) +
               " domain_dim=" + std::to_string(a.domain_dim()) + ">";
      });

  m.def(
      "gen_symmetric",
      [](Eigen::Index dim, Eigen::Index defect, bool dense_range, std::pair<double, double> window,
         std::uint64_t seed) {
        return gen_symmetric(InstanceSpec{dim, defect, dense_range, window.first, window.second, seed});
      },
      py::arg("dim") = 2, py::arg("defect") = 1, py::arg("dense_range") = false,
      py::arg("window") = std::pair<double, double>{0.5, 2.0}, py::arg("seed") = 0);
  m.def("worked_example", &worked_example);
  m.def("truncated_shift", &truncated_shift, py::arg("n"));

  m.def(
      "defect_numbers", [](const DomainOperator& a, Complex z) { return defect_numbers(a, z); }, py::arg("a"),
      py::arg("z"));
  m.def(
      "defect_frames", [](const DomainOperator& a, Complex z) { return defect_dict(defect_data(a, z)); },
      py::arg("a"), py::arg("z"));
  m.def(
      "cayley", [](const DomainOperator& a, Complex z) { return cayley(a, z); }, py::arg("a"), py::arg("z"));

  m.def(
      "extend",
      [](const DomainOperator& a, Complex z, const Matrix& coefficients) {
        const ExtensionReport r = extend(a, parameter_from_matrix(defect_data(a, z), coefficients));
        py::dict out;
        out["b"] = r.b;
        out["classification"] = std::string(to_string(r.classification));
        out["parameter_kind"] = std::string(to_string(r.parameter.kind));
        out["invertible"] = r.invertible;
        out["defect_numbers"] = r.defect_numbers_of_b;
        out["kernel_witness"] = optional_vector(r.kernel_witness);
        return out;
      },
      py::arg("a"), py::arg("z"), py::arg("coefficients"));

  m.def(
      "recover_parameter",
      [](const DomainOperator& a, const DomainOperator& b, Complex z) {
        const ContractionParameter p = recover_parameter(a, b, z);
        py::dict out;
        out["coefficients"] = coefficients_of(defect_data(a, z), p.t);
        out["domain_frame"] = Matrix(p.t.domain().frame());
        out["kind"] = std::string(to_string(p.kind));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("z"));

  m.def(
      "check_invertibility",
      [](const DomainOperator& a, Complex z, const Matrix& coefficients) {
        const InvertibilityVerdict v =
            check_invertibility(a, parameter_from_matrix(defect_data(a, z), coefficients));
        py::dict out;
        out["direct"] = v.direct;
        out["via_admissibility"] = v.via_admissibility;
        out["via_forbidden"] = v.via_forbidden;
        out["agree"] = v.agree;
        out["margin"] = v.margin();
        out["witness"] = optional_vector(v.witness);
        return out;
      },
      py::arg("a"), py::arg("z"), py::arg("coefficients"));

  m.def(
      "build_invertible_selfadjoint",
      [](const DomainOperator& a, Complex z, std::uint64_t seed, bool use_double) {
        const ExtensionChain c = build_invertible_selfadjoint(a, z, seed, ChainOptions{use_double, 64});
        py::dict out;
        out["final"] = c.final_matrix();
        out["steps"] = c.steps.size();
        out["base_dim"] = c.base_dim;
        out["exit_dim"] = c.exit_dim;
        return out;
      },
      py::arg("a"), py::arg("z"), py::arg("seed") = 0, py::arg("double") = false);

  m.def(
      "compressed_resolvent",
      [](const DomainOperator& a, const Matrix& atilde, Complex lambda) {
        return compressed_resolvent(EmbeddedExtension::make(a, atilde), lambda);
      },
      py::arg("a"), py::arg("atilde"), py::arg("lam"));

  m.def(
      "shtraus_resolvent",
      [](const DomainOperator& a, const Matrix& atilde, Complex lambda0, Complex lambda) {
        const EmbeddedExtension e = EmbeddedExtension::make(a, atilde);
        return shtraus_resolvent(a, ParameterFunction::from_extension(e, lambda0), lambda);
      },
      py::arg("a"), py::arg("atilde"), py::arg("lambda0"), py::arg("lam"),
      "Resolvent built from the parameter function that the extension atilde induces at lambda0.");

  m.def(
      "default_grid",
      [](Complex lambda0, std::optional<Matrix> atilde) {
        return default_grid(lambda0, atilde ? &*atilde : nullptr);
      },
      py::arg("lambda0"), py::arg("atilde") = py::none());

  m.def(
      "i_admissibility",
      [](const DomainOperator& a, Complex lambda0, const Matrix& value) {
        const ParameterFunction f = ParameterFunction::constant(a, lambda0, value);
        const IAdmissibilityVerdict v = i_admissibility_test(a, f, SectorSpec::default_for(lambda0));
        py::dict out;
        out["admissible"] = v.admissible;
        out["witness"] = optional_vector(v.witness);
        out["limit_residual"] = v.limit_residual;
        out["rate_estimates"] = v.rate_estimates;
        out["forbidden_domain_dim"] = v.forbidden_domain_dim;
        return out;
      },
      py::arg("a"), py::arg("lambda0"), py::arg("value"),
      "Test for the constant parameter function with the given defect-frame matrix.");

  m.def(
      "verify",
      [](const DomainOperator& a, const Matrix& atilde, Complex lambda0) {
        VerifyOptions options;
        options.lambda0 = lambda0;
        const VerifyReport r = run_verify(EmbeddedExtension::unchecked(a, atilde), options);
        py::dict checks;
        for (const CheckResult& c : r.checks) {
          py::dict entry;
          entry["passed"] = c.passed;
          entry["skipped"] = c.skipped;
          entry["value"] = c.value;
          entry["threshold"] = c.threshold;
          checks[py::str(c.name)] = entry;
        }
        py::dict out;
        out["all_passed"] = r.all_passed();
        out["checks"] = checks;
        return out;
      },
      py::arg("a"), py::arg("atilde"), py::arg("lambda0") = Complex(0.0, 1.0));
}
