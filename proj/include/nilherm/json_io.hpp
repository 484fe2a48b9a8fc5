#pragma once

#include <array>
#include <optional>
#include <string>

#include "json.hpp"
#include "nilherm/hermitian.hpp"
#include "nilherm/three_step_data.hpp"
#include "nilherm/two_step_data.hpp"

namespace nilherm {

using Json = nlohmann::ordered_json;

// Malformed documents raise ParseError; mathematically invalid content
// (Jacobi, J^2 != -I) raises SemanticError when the objects are built.
Json parse_json_text(const std::string& text);

Json rational_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json vector_json(const RVector& v);
RVector vector_from_json(const Json& j, Index size = -1);
// Array of rows.
Json matrix_json(const RMatrix& m);
RMatrix matrix_from_json(const Json& j, Index rows = -1, Index cols = -1);
// Array of basis columns.
Json subspace_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, Index ambient);

// {"dim", "name", "brackets": [{"i", "j", "coeffs"}]} with one-based i < j.
Json algebra_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const Json& j);

// Algebra with optional J, metric and hypercomplex triple.
struct Document {
  LieAlgebra algebra;
  std::optional<RMatrix> J;
  std::optional<RMatrix> metric;
  std::optional<std::array<RMatrix, 3>> hypercomplex;
};
Json document_json(const Document& d);
// Accepts a full document or a bare algebra object.
Document document_from_json(const Json& j);

Json two_step_json(const Complex2StepData& d);
Complex2StepData two_step_from_json(const Json& j);
Json three_step_json(const Complex3StepData& d);
Complex3StepData three_step_from_json(const Json& j);

Json report_json(const AlgebraReport& r);
Json classification_json(const JClassification& c);

// [{"indices": [one-based...], "value": "p/q"}] over the nonzero entries.
template <std::size_t K>
Json form_json(const AlternatingForm<K>& f) {
  Json out = Json::array();
  for (const auto& [idx, value] : f.entries) {
    Json ids = Json::array();
    for (Index i : idx) ids.push_back(i + 1);
    out.push_back({{"indices", ids}, {"value", rational_json(value)}});
  }
  return out;
}

}  // namespace nilherm
