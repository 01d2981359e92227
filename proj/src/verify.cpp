// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

#include "symext/verify.hpp"

#include <algorithm>
#include <functional>

#include "symext/errors.hpp"

namespace symext {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed || c.skipped; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

CheckResult skipped(std::string name, double threshold, std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.skipped = true;
  c.passed = true;
  c.threshold = threshold;
  c.note = std::move(note);
  return c;
}

CheckResult failed(std::string name, double threshold, std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.threshold = threshold;
  c.note = std::move(note);
  return c;
}

// Max of `deviation` over the grid; degenerate points are counted, not fatal.
CheckResult over_grid(std::string name, double threshold, const std::vector<Complex>& grid,
                      const std::function<double(Complex)>& deviation) {
  CheckResult c;
  c.name = std::move(name);
  c.threshold = threshold;
  try {
    for (const Complex& lambda : grid) {
      try {
        c.value = std::max(c.value, deviation(lambda));
        ++c.points;
      } catch (const ProjectionDegenerate&) {
        ++c.degenerate_points;
      } catch (const SpectrumHit&) {
        ++c.degenerate_points;
      }
    }
  } catch (const Error& err) {
    c.note = err.what();
    return c;
  }
  c.passed = c.points > 0 && c.value < threshold;
  if (c.points == 0) c.note = "no non-degenerate grid point";
  return c;
}

Matrix as_full(const DefectData& dd, const Matrix& coeffs) {
  return dd.n_zbar.frame() * coeffs * dd.n_z.frame().adjoint();
}

}  // namespace

VerifyReport run_verify(const EmbeddedExtension& e, const VerifyOptions& options) {
  const Tolerances& tol = options.tol;
  const Complex l0 = options.lambda0;
  require_nonreal(l0, tol);
  const DomainOperator& a = e.a;

  VerifyReport report;
  report.hermiticity_residual = e.hermiticity_residual();
  report.containment_residual = e.containment_residual();
  const bool ext_ok = report.hermiticity_residual <= tol.inclusion && report.containment_residual <= tol.inclusion;
  const bool a_ok = is_symmetric(a, tol.rank) && is_injective(a, tol.rank);
  const std::string ext_note = "Atilde is not a self-adjoint extension of A";

  const std::vector<Complex> grid = options.grid.empty() ? default_grid(l0, &e.atilde) : options.grid;
  auto gate = [&](CheckResult c, bool hypotheses, const std::string& why) {
    c.hypotheses_ok = hypotheses;
    if (!hypotheses) {
      c.passed = false;
      c.skipped = false;
      c.note = c.note.empty() ? why : why + "; " + c.note;
    }
    report.checks.push_back(std::move(c));
  };

  // Identities on A alone.
  if (!a_ok) {
    for (const char* name : {"k1_1", "k1_2", "cayley_round_trip"}) {
      gate(failed(name, options.cayley_tol, ""), false, "A is not symmetric and injective");
    }
  } else {
    const DomainOperator a_inv = inverse_op(a, tol.rank);
    const DefectData dd = defect_data(a, l0, tol);
    const DefectData dd_inv = defect_data(a_inv, 1.0 / l0, tol);
    report.defect = dd.n_z.dim();

    CheckResult k11;
    k11.name = "k1_1";
    k11.threshold = options.cayley_tol;
    k11.value = std::max(subspace_distance(dd.m_z, dd_inv.m_z), subspace_distance(dd.n_z, dd_inv.n_z));
    k11.passed = k11.value < k11.threshold;
    report.checks.push_back(k11);

    CheckResult k12;
    k12.name = "k1_2";
    k12.threshold = options.cayley_tol;
    const DomainOperator u = cayley(a, l0, tol);
    const DomainOperator u_inv = cayley(a_inv, 1.0 / l0, tol);
    k12.value = max_singular_value(u.full_matrix() - (std::conj(l0) / l0) * u_inv.full_matrix());
    k12.passed = k12.value < k12.threshold;
    report.checks.push_back(k12);

    CheckResult rt;
    rt.name = "cayley_round_trip";
    rt.threshold = options.cayley_tol;
    const LinearRelation back = inverse_cayley(u, l0, tol);
    rt.value = graph_distance(back, graph(a));
    rt.passed = relation_is_operator(back, tol.rank) && rt.value < rt.threshold;
    report.checks.push_back(rt);
  }

  const bool base_ok = a_ok && ext_ok;
  const std::string base_note = a_ok ? ext_note : "A is not symmetric and injective";
  const bool atilde_invertible =
      e.total_dim() == 0 || min_singular_value(e.atilde) > tol.rank * max_singular_value(e.atilde);
  const bool has_defect = report.defect > 0;

  // L / B / F identities under inversion.
  if (!atilde_invertible) {
    for (const char* name : {"k2_10", "k2_12", "k2_13"}) {
      report.checks.push_back(skipped(name, options.identity_tol, "Atilde is singular"));
    }
  } else {
    const EmbeddedExtension e_inv = e.inverse(tol);
    gate(over_grid("k2_10", options.identity_tol, grid,
                   [&](Complex lambda) {
                     const Subspace l = script_l(e, lambda, tol);
                     const Subspace mapped = orthonormalize(Matrix(e.atilde * l.frame()), tol.rank);
                     return subspace_distance(mapped, script_l(e_inv, 1.0 / lambda, tol));
                   }),
         base_ok, base_note);
    gate(over_grid("k2_12", options.identity_tol, grid,
                   [&](Complex lambda) {
                     const DomainOperator b = frak_b(e, lambda, tol);
                     if (!is_injective(b, tol.rank)) throw ProjectionDegenerate("B_lambda is not injective");
                     return graph_distance(inverse_op(b, tol.rank), frak_b(e_inv, 1.0 / lambda, tol));
                   }),
         base_ok, base_note);
    if (!base_ok) {
      gate(failed("k2_13", options.identity_tol, ""), false, base_note);
    } else if (!has_defect) {
      report.checks.push_back(skipped("k2_13", options.identity_tol, "defect 0: empty defect frames"));
    } else {
      const DefectData dd = defect_data(a, l0, tol);
      const DefectData dd_inv = defect_data(inverse_op(a, tol.rank), 1.0 / l0, tol);
      report.checks.push_back(over_grid("k2_13", options.identity_tol, grid, [&](Complex lambda) {
        const Matrix lhs = as_full(dd_inv, frak_f(e_inv, 1.0 / lambda, 1.0 / l0, tol));
        const Matrix rhs = (l0 / std::conj(l0)) * as_full(dd, frak_f(e, lambda, l0, tol));
        return max_singular_value(lhs - rhs);
      }));
    }
  }

  // Neumann round trip through B_lambda at base point lambda0.
  if (!base_ok) {
    gate(failed("neumann_round_trip", options.round_trip_tol, ""), false, base_note);
  } else if (!has_defect) {
    report.checks.push_back(skipped("neumann_round_trip", options.round_trip_tol, "defect 0"));
  } else {
    const DefectData dd = defect_data(a, l0, tol);
    report.checks.push_back(over_grid("neumann_round_trip", options.round_trip_tol, grid, [&](Complex lambda) {
      const DomainOperator b = frak_b(e, lambda, tol);
      const ContractionParameter t = recover_parameter(a, b, l0, tol);
      const double graphs = graph_distance(extend(a, t, tol).b, b);
      const Matrix direct = as_full(dd, frak_f(e, lambda, l0, tol));
      return std::max(graphs, max_singular_value(t.t.full_matrix() - direct));
    }));
  }

  // Resolvent symmetry and the Shtraus correspondence.
  gate(over_grid("resolvent_symmetry", options.symmetry_tol, grid,
                 [&](Complex lambda) {
                   return max_singular_value(compressed_resolvent(e, lambda, tol).adjoint() -
                                             compressed_resolvent(e, std::conj(lambda), tol));
                 }),
       base_ok, base_note);
  if (!base_ok) {
    gate(failed("shtraus", options.shtraus_tol, ""), false, base_note);
  } else {
    const ParameterFunction f = ParameterFunction::from_extension(e, l0, tol);
    report.checks.push_back(over_grid("shtraus", options.shtraus_tol, grid, [&](Complex lambda) {
      double worst = 0.0;
      for (const Complex at : {lambda, std::conj(lambda)}) {
        worst = std::max(worst, max_singular_value(compressed_resolvent(e, at, tol) - shtraus_resolvent(a, f, at, tol)));
      }
      return worst;
    }));
  }

  // I-admissibility of the parameter generated by Atilde.
  if (!base_ok) {
    gate(failed("i_admissibility", options.i_options.rate_bound, ""), false, base_note);
  } else if (!has_defect) {
    report.checks.push_back(skipped("i_admissibility", options.i_options.rate_bound, "defect 0"));
  } else {
    CheckResult c;
    c.name = "i_admissibility";
    c.threshold = options.i_options.rate_bound;
    try {
      const ParameterFunction f = ParameterFunction::from_extension(e, l0, tol);
      const SectorSpec sector = options.sector.radii.empty() ? SectorSpec::default_for(l0) : options.sector;
      const IAdmissibilityVerdict v = i_admissibility_test(a, f, sector, options.i_options, tol);
      c.points = static_cast<int>(sector.radii.size() * sector.ray_angles.size());
      c.value = v.rate_estimates.empty() ? 0.0 : *std::min_element(v.rate_estimates.begin(), v.rate_estimates.end());
      if (atilde_invertible) {
        c.passed = v.admissible;
        c.note = v.admissible ? "admissible" : "rejected although Atilde is invertible";
      } else {
        c.passed = true;
        c.note = std::string(v.admissible ? "admissible" : "not admissible") + "; Atilde singular, no expectation";
      }
    } catch (const Error& err) {
      c.note = err.what();
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace symext
