// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// symext: command-line scenarios over the extension toolkit.
//
// Exit codes: 0 success, 1 usage / IO / parse / precondition error,
// 2 infeasible instance spec, 3 parameter not admissible (witness on stderr),
// 4 cross-check disagreement (invertibility tests, failed identity suite).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symext/errors.hpp"
#include "symext/io.hpp"
#include "symext/verify.hpp"

namespace {

using namespace symext;
using io::Json;

enum ExitCode { kOk = 0, kUsage = 1, kInfeasible = 2, kNotAdmissible = 3, kDisagreement = 4 };

Complex parse_complex(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  if (!(in >> re)) throw ParseError("complex scalar must be 're,im': " + text);
  if (!(in >> im)) im = 0.0;
  std::string rest;
  if (in >> rest) throw ParseError("complex scalar must be 're,im': " + text);
  return {re, im};
}

std::vector<Complex> parse_grid(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!item.empty()) out.push_back(parse_complex(item));
  }
  return out;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_file(path, j);
  }
}

void error_json(const std::string& kind, const std::string& what, const Vector* witness = nullptr) {
  Json j{{"error", kind}, {"message", what}};
  if (witness != nullptr) j["witness"] = io::vector_to_json(*witness);
  std::cerr << j.dump() << '\n';
}

// Parameter file: operator format, or {"coefficients": ...} in the defect frames at z.
ContractionParameter load_parameter(const DomainOperator& a, Complex z, const std::string& path,
                                    const Tolerances& tol) {
  if (path.empty()) {
    const Eigen::Index d = a.ambient_dim();
    return make_parameter(z, DomainOperator(Subspace(d), Matrix(d, 0)), tol);
  }
  const Json j = io::read_file(path);
  if (j.contains("coefficients")) {
    const DefectData dd = defect_data(a, z, tol);
    return parameter_from_matrix(dd, io::matrix_from_json(j.at("coefficients"), dd.n_zbar.dim(), dd.n_z.dim()), tol);
  }
  return make_parameter(z, io::operator_from_json(j), tol);
}

EmbeddedExtension load_extension(const DomainOperator& a, const std::string& path) {
  Json j = io::read_file(path);
  if (j.value("kind", "") == "extension_chain") j = j.at("final");
  const DomainOperator ext = io::operator_from_json(j);
  if (!ext.is_total()) throw ParseError("extension operator must be defined on the whole space");
  return EmbeddedExtension::unchecked(a, ext.full_matrix());
}

Json check_to_json(const CheckResult& c) {
  return Json{{"name", c.name},       {"passed", c.passed},
              {"skipped", c.skipped}, {"value", c.value},
              {"threshold", c.threshold}, {"hypotheses_ok", c.hypotheses_ok},
              {"points", c.points},   {"degenerate_points", c.degenerate_points},
              {"note", c.note}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extensions of symmetric operators with non-dense domains"};
  app.require_subcommand(1);

  Tolerances tol = kDefaultTolerances;
  app.add_option("--tol-rank", tol.rank, "Rank tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-inclusion", tol.inclusion, "Inclusion tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-margin", tol.margin, "Decision margin")->check(CLI::PositiveNumber);

  std::string out_path;
  std::string a_path, ext_path, param_path, z_text = "0,1", lambda0_text = "0,1", grid_text, csv_path;
  std::uint64_t seed = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a symmetric invertible operator");
  InstanceSpec spec;
  std::string window_text = "0.5,2";
  int shift_n = 0;
  gen->add_option("--dim", spec.dim, "Ambient dimension");
  gen->add_option("--defect", spec.defect, "Defect number n (both)");
  gen->add_flag("--dense-range,!--no-dense-range", spec.dense_range, "Require a dense range");
  gen->add_option("--window", window_text, "Spectrum window lo,hi");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--truncated-shift", shift_n, "Emit the finite shift section of length N instead");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  // extend
  auto* ext = app.add_subcommand("extend", "Neumann extension for a parameter");
  ext->add_option("a", a_path, "Operator JSON")->required();
  ext->add_option("--z", z_text, "Base point re,im");
  ext->add_option("--param", param_path, "Parameter JSON (omit for the empty parameter)");
  ext->add_option("-o,--output", out_path, "Report file (default stdout)");

  // check-invert
  auto* inv = app.add_subcommand("check-invert", "Three-way invertibility verdict");
  inv->add_option("a", a_path, "Operator JSON")->required();
  inv->add_option("--z", z_text, "Base point re,im");
  inv->add_option("--param", param_path, "Parameter JSON");
  inv->add_option("-o,--output", out_path, "Verdict file (default stdout)");

  // build-sa
  auto* bsa = app.add_subcommand("build-sa", "Invertible self-adjoint extension by rank-one steps");
  bool use_double = false;
  std::string chain_path;
  bsa->add_option("a", a_path, "Operator JSON")->required();
  bsa->add_option("--z", z_text, "Base point re,im");
  bsa->add_option("--seed", seed, "Seed for candidate ordering");
  bsa->add_flag("--double", use_double, "Start from A (+) (-A)");
  bsa->add_option("-o,--output", out_path, "Final operator file");
  bsa->add_option("--chain", chain_path, "Chain audit JSON (default stdout)");

  // resolvent
  auto* res = app.add_subcommand("resolvent", "Compressed resolvent grid and Shtraus comparison");
  res->add_option("a", a_path, "Operator JSON")->required();
  res->add_option("ext", ext_path, "Self-adjoint extension (operator or chain JSON)")->required();
  res->add_option("--lambda0", lambda0_text, "Base point re,im");
  res->add_option("--grid", grid_text, "Explicit grid 're,im;re,im;...' (default two circles)");
  res->add_option("--csv", csv_path, "CSV grid output (default stdout)");
  res->add_option("-o,--output", out_path, "Comparison JSON (stdout if only --csv is given; omitted if neither)");

  // verify
  auto* ver = app.add_subcommand("verify", "Identity suite");
  std::string suite = "all";
  ver->add_option("a", a_path, "Operator JSON")->required();
  ver->add_option("ext", ext_path, "Self-adjoint extension (operator or chain JSON)")->required();
  ver->add_option("--lambda0", lambda0_text, "Base point re,im");
  ver->add_option("--grid", grid_text, "Explicit grid");
  ver->add_option("--suite", suite, "Check name or 'all'");
  ver->add_option("-o,--output", out_path, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      Json doc;
      if (shift_n > 0) {
        doc = io::operator_document(truncated_shift(shift_n));
        doc["meta"] = Json{{"construction", "truncated_shift"}, {"n", shift_n}, {"note", std::string(kTruncatedShiftNote)}};
      } else {
        const Complex w = parse_complex(window_text);
        spec.window_lo = w.real();
        spec.window_hi = w.imag();
        spec.seed = seed;
        const DomainOperator a = gen_symmetric(spec);
        doc = io::operator_document(a);
        doc["spec"] = io::to_json(spec);
        const auto [n, m] = defect_numbers(a, Complex(0.0, 1.0), tol);
        doc["defect_numbers"] = {n, m};
      }
      emit(doc, out_path);
      return kOk;
    }

    const DomainOperator a = io::operator_from_json(io::read_file(a_path));

    if (ext->parsed()) {
      const Complex z = parse_complex(z_text);
      const ContractionParameter p = load_parameter(a, z, param_path, tol);
      emit(io::to_json(extend(a, p, tol), tol), out_path);
      return kOk;
    }

    if (inv->parsed()) {
      const Complex z = parse_complex(z_text);
      const InvertibilityVerdict v = check_invertibility(a, load_parameter(a, z, param_path, tol), tol);
      Json j = io::to_json(v, tol);
      const bool borderline = v.margin() <= tol.margin;
      j["borderline"] = borderline;
      emit(j, out_path);
      return (!v.agree && !borderline) ? kDisagreement : kOk;
    }

    if (bsa->parsed()) {
      const Complex z = parse_complex(z_text);
      const ExtensionChain chain = build_invertible_selfadjoint(a, z, seed, ChainOptions{use_double, 64}, tol);
      if (!out_path.empty()) {
        Json doc = io::operator_document(chain.final_op);
        doc["meta"] = Json{{"construction", "build_invertible_selfadjoint"},
                           {"base_dim", chain.base_dim},
                           {"exit_dim", chain.exit_dim},
                           {"seed", seed}};
        io::write_file(out_path, doc);
      }
      emit(io::to_json(chain, tol), chain_path);
      return kOk;
    }

    const EmbeddedExtension e = load_extension(a, ext_path);
    const Complex l0 = parse_complex(lambda0_text);
    const std::vector<Complex> grid = grid_text.empty() ? default_grid(l0, &e.atilde) : parse_grid(grid_text);

    if (res->parsed()) {
      require_nonreal(l0, tol);
      std::vector<std::pair<Complex, Matrix>> rows;
      Json skipped = Json::array();
      double max_error = 0.0;
      std::optional<ParameterFunction> f;
      std::string shtraus_note;
      try {
        f = ParameterFunction::from_extension(EmbeddedExtension::make(a, e.atilde, tol), l0, tol);
      } catch (const Error& err) {
        shtraus_note = err.what();
      }
      for (const Complex& lambda : grid) {
        try {
          const Matrix r = compressed_resolvent(e, lambda, tol);
          rows.emplace_back(lambda, r);
          if (f) max_error = std::max(max_error, max_singular_value(r - shtraus_resolvent(a, *f, lambda, tol)));
        } catch (const Error& err) {
          skipped.push_back(Json{{"lambda", io::to_json(lambda)}, {"reason", err.what()}});
        }
      }
      if (csv_path.empty()) {
        io::write_grid_csv(std::cout, rows);
      } else {
        std::ofstream out(csv_path);
        if (!out) throw IoError("cannot write " + csv_path);
        io::write_grid_csv(out, rows);
      }
      Json j{{"schema", io::kSchemaVersion},
             {"kind", "resolvent_comparison"},
             {"lambda0", io::to_json(l0)},
             {"points", rows.size()},
             {"skipped", skipped},
             {"shtraus_available", f.has_value()},
             {"max_shtraus_error", f ? Json(max_error) : Json(nullptr)},
             {"note", shtraus_note},
             {"tolerances", io::to_json(tol)}};
      if (!out_path.empty() || !csv_path.empty()) emit(j, out_path);
      return kOk;
    }

    if (ver->parsed()) {
      VerifyOptions opts;
      opts.lambda0 = l0;
      opts.grid = grid;
      opts.tol = tol;
      const VerifyReport r = run_verify(e, opts);
      Json checks = Json::array();
      bool ok = true;
      for (const auto& c : r.checks) {
        if (suite != "all" && c.name != suite) continue;
        ok = ok && (c.passed || c.skipped);
        checks.push_back(check_to_json(c));
      }
      if (checks.empty()) throw ParseError("unknown suite '" + suite + "'");
      Json j{{"schema", io::kSchemaVersion},
             {"kind", "verify_report"},
             {"lambda0", io::to_json(l0)},
             {"defect", r.defect},
             {"hermiticity_residual", r.hermiticity_residual},
             {"containment_residual", r.containment_residual},
             {"all_passed", ok},
             {"checks", checks},
             {"tolerances", io::to_json(tol)}};
      emit(j, out_path);
      return ok ? kOk : kDisagreement;
    }
  } catch (const SpecInfeasible& e) {
    error_json("SpecInfeasible", e.what());
    return kInfeasible;
  } catch (const NotAdmissible& e) {
    error_json("NotAdmissible", e.what(), &e.witness());
    return kNotAdmissible;
  } catch (const IoError& e) {
    error_json("IoError", e.what());
    return kUsage;
  } catch (const ParseError& e) {
    error_json("ParseError", e.what());
    return kUsage;
  } catch (const Error& e) {
    error_json("Error", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    error_json("Error", e.what());
    return kUsage;
  }
  return kUsage;
}
