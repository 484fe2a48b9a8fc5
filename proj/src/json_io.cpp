#include "nilherm/json_io.hpp"

namespace nilherm {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Index index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<Index>();
}

Json matrices_json(const std::vector<RMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

std::vector<RMatrix> matrices_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array()) throw ParseError("expected an array of matrices");
  std::vector<RMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, rows, cols));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json rational_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("rationals are written as \"p/q\" strings or integers");
}

Json vector_json(const RVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v(i)));
  return out;
}

RVector vector_from_json(const Json& j, Index size) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  if (size >= 0 && static_cast<Index>(j.size()) != size)
    throw ParseError("expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  RVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json matrix_json(const RMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_json(RVector(m.row(r).transpose())));
  return out;
}

RMatrix matrix_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array()) throw ParseError("expected a matrix as an array of rows");
  const Index r = static_cast<Index>(j.size());
  if (rows >= 0 && r != rows) throw ParseError("expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
  if (r == 0) return RMatrix(0, cols >= 0 ? cols : 0);
  const Index c = static_cast<Index>(j[0].size());
  if (cols >= 0 && c != cols) throw ParseError("expected " + std::to_string(cols) + " columns, got " + std::to_string(c));
  RMatrix m(r, c);
  for (Index i = 0; i < r; ++i) m.row(i) = vector_from_json(j[static_cast<std::size_t>(i)], c).transpose();
  return m;
}

Json subspace_json(const Subspace& s) {
  Json out = Json::array();
  for (Index c = 0; c < s.dim(); ++c) out.push_back(vector_json(RVector(s.basis().col(c))));
  return out;
}

Subspace subspace_from_json(const Json& j, Index ambient) {
  if (!j.is_array()) throw ParseError("expected a subspace as an array of basis columns");
  RMatrix cols(ambient, static_cast<Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) cols.col(static_cast<Index>(c)) = vector_from_json(j[c], ambient);
  const Subspace s = Subspace::span(cols);
  if (s.dim() != cols.cols()) throw ParseError("subspace basis columns are linearly dependent");
  return s;
}

Json algebra_json(const LieAlgebra& l) {
  Json brackets = Json::array();
  for (const auto& e : l.brackets())
    brackets.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", vector_json(e.coeffs)}});
  Json out = {{"dim", l.dim()}};
  if (!l.name().empty()) out["name"] = l.name();
  out["brackets"] = brackets;
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  const Index n = index_from_json(field(j, "dim"), "dim");
  if (n < 0) throw ParseError("dim must be nonnegative");
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    const Json& bs = j.at("brackets");
    if (!bs.is_array()) throw ParseError("brackets must be an array");
    for (const auto& b : bs) {
      const Index i = index_from_json(field(b, "i"), "i") - 1;
      const Index k = index_from_json(field(b, "j"), "j") - 1;
      if (i < 0 || k < 0 || i >= n || k >= n || i >= k)
        throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
      entries.push_back({i, k, vector_from_json(field(b, "coeffs"), n)});
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("name must be a string");
    name = j.at("name").get<std::string>();
  }
  return LieAlgebra(n, entries, name);
}

Json document_json(const Document& d) {
  Json out = {{"algebra", algebra_json(d.algebra)}};
  if (d.J) out["J"] = matrix_json(*d.J);
  if (d.metric) out["metric"] = matrix_json(*d.metric);
  if (d.hypercomplex)
    out["hypercomplex"] = {{"J1", matrix_json((*d.hypercomplex)[0])},
                           {"J2", matrix_json((*d.hypercomplex)[1])},
                           {"J3", matrix_json((*d.hypercomplex)[2])}};
  return out;
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("algebra")) return Document{algebra_from_json(j), {}, {}, {}};
  Document d{algebra_from_json(j.at("algebra")), {}, {}, {}};
  const Index n = d.algebra.dim();
  if (j.contains("J")) d.J = matrix_from_json(j.at("J"), n, n);
  if (j.contains("metric")) d.metric = matrix_from_json(j.at("metric"), n, n);
  if (j.contains("hypercomplex")) {
    const Json& h = j.at("hypercomplex");
    d.hypercomplex = std::array<RMatrix, 3>{matrix_from_json(field(h, "J1"), n, n), matrix_from_json(field(h, "J2"), n, n),
                                            matrix_from_json(field(h, "J3"), n, n)};
  }
  return d;
}

Json two_step_json(const Complex2StepData& d) {
  return {{"n0", algebra_json(d.n0)},
          {"g0", matrix_json(d.g0)},
          {"b", subspace_json(d.b)},
          {"v", subspace_json(d.v)},
          {"J_v", matrix_json(d.jv)},
          {"z1_dim", d.z1_dim},
          {"z1_gram", matrix_json(d.z1_gram)},
          {"psi_z1", matrices_json(d.psi_z1)},
          {"psi_b", matrices_json(d.psi_b)},
          {"p_plus", subspace_json(d.p_plus)},
          {"p_minus", subspace_json(d.p_minus)},
          {"a1", subspace_json(d.a1)}};
}

Complex2StepData two_step_from_json(const Json& j) {
  Complex2StepData d;
  d.n0 = algebra_from_json(field(j, "n0"));
  const Index n = d.n0.dim();
  d.g0 = matrix_from_json(field(j, "g0"), n, n);
  d.b = subspace_from_json(field(j, "b"), n);
  d.v = subspace_from_json(field(j, "v"), n);
  const Index m = d.v.dim();
  d.jv = matrix_from_json(field(j, "J_v"), m, m);
  d.z1_dim = index_from_json(field(j, "z1_dim"), "z1_dim");
  if (d.z1_dim < 0) throw ParseError("z1_dim must be nonnegative");
  d.z1_gram = matrix_from_json(field(j, "z1_gram"), d.z1_dim, d.z1_dim);
  d.psi_z1 = matrices_from_json(field(j, "psi_z1"), m, m);
  d.psi_b = matrices_from_json(field(j, "psi_b"), m, m);
  d.p_plus = subspace_from_json(field(j, "p_plus"), n);
  d.p_minus = subspace_from_json(field(j, "p_minus"), n);
  d.a1 = subspace_from_json(field(j, "a1"), n);
  return d;
}

Json three_step_json(const Complex3StepData& d) {
  return {{"dim_v", d.dim_v}, {"dim_q", d.dim_q}, {"dim_z1", d.dim_z1}, {"dim_z2", d.dim_z2},
          {"dim_u", d.dim_u}, {"J_v", matrix_json(d.jv)}, {"J0", matrix_json(d.j0)}, {"J1", matrix_json(d.j1)},
          {"alpha", matrices_json(d.alpha)}, {"mu", matrices_json(d.mu)}, {"rho", matrices_json(d.rho)},
          {"metric", matrix_json(d.gram)}};
}

Complex3StepData three_step_from_json(const Json& j) {
  Complex3StepData d;
  d.dim_v = index_from_json(field(j, "dim_v"), "dim_v");
  d.dim_q = index_from_json(field(j, "dim_q"), "dim_q");
  d.dim_z1 = index_from_json(field(j, "dim_z1"), "dim_z1");
  d.dim_z2 = index_from_json(field(j, "dim_z2"), "dim_z2");
  d.dim_u = index_from_json(field(j, "dim_u"), "dim_u");
  if (d.dim_v < 0 || d.dim_q < 0 || d.dim_z1 < 0 || d.dim_z2 < 0 || d.dim_u < 0)
    throw ParseError("dimensions must be nonnegative");
  d.jv = matrix_from_json(field(j, "J_v"), d.dim_v, d.dim_v);
  d.j0 = matrix_from_json(field(j, "J0"), d.dim_q, d.dim_q);
  d.j1 = matrix_from_json(field(j, "J1"), d.dim_h(), d.dim_h());
  d.alpha = matrices_from_json(field(j, "alpha"), d.dim_v, d.dim_v);
  d.mu = matrices_from_json(field(j, "mu"), d.dim_v, d.dim_v);
  d.rho = matrices_from_json(field(j, "rho"), d.dim_q, d.dim_v);
  d.gram = matrix_from_json(field(j, "metric"), d.dim(), d.dim());
  return d;
}

Json report_json(const AlgebraReport& r) {
  Json out = {{"dim", r.dim}, {"commutator_dim", r.commutator_dim}, {"center_dim", r.center_dim},
              {"first_betti", r.first_betti}};
  out["step"] = r.step ? Json(*r.step) : Json(nullptr);
  out["ascending_series_dims"] = r.ascending_series_dims;
  out["lower_series_dims"] = r.lower_series_dims;
  return out;
}

Json classification_json(const JClassification& c) {
  Json out = {{"integrable", c.integrable}, {"abelian", c.abelian}, {"biinvariant", c.biinvariant}};
  out["j_step"] = c.j_nilpotent_step ? Json(*c.j_nilpotent_step) : Json(nullptr);
  out["strongly_non_nilpotent"] = c.strongly_non_nilpotent;
  out["center_invariant"] = c.center_invariant;
  out["J_commutator_in_center"] = c.commutator_in_center;
  out["nj_dim"] = c.nj_dim;
  out["central_complex_abelian_factor"] = c.central_complex_abelian_factor;
  return out;
}

}  // namespace nilherm
