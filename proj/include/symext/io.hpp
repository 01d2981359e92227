// Copyright 2026 The symext Authors
// SPDX-License-Identifier: Apache-2.0

// JSON (schema 1) and CSV serialization. Complex numbers are [re, im],
// matrices row-major nested arrays.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "symext/instances.hpp"
#include "symext/invertibility.hpp"
#include "symext/resolvents.hpp"

namespace symext::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(Complex z);
Json to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Json to_json(const Subspace& s);
Json to_json(const Tolerances& tol);
Json to_json(const DomainOperator& op);
Json to_json(const DefectData& dd);
Json to_json(const ExtensionReport& report, const Tolerances& tol);
Json to_json(const InvertibilityVerdict& v, const Tolerances& tol);
Json to_json(const ExtensionChain& chain, const Tolerances& tol);
Json to_json(const IAdmissibilityVerdict& v);
Json to_json(const InstanceSpec& spec);

Complex complex_from_json(const Json& j);
/// `rows` disambiguates empty matrices: [] is rows x 0 when rows >= 0.
Matrix matrix_from_json(const Json& j, Eigen::Index rows = -1, Eigen::Index cols = -1);
Vector vector_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
Tolerances tolerances_from_json(const Json& j, Tolerances base = kDefaultTolerances);

/// {"schema": 1, "ambient_dim", "domain_frame", "action"}; extra keys are kept
/// by the caller. Validates schema, shapes and frame orthonormality.
Json operator_document(const DomainOperator& op);
DomainOperator operator_from_json(const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

/// Header: lambda_re, lambda_im, then r_i_j_re, r_i_j_im row-major.
void write_grid_csv(std::ostream& out, const std::vector<std::pair<Complex, Matrix>>& grid);

}  // namespace symext::io
