#include "nilherm/complex_structure.hpp"

namespace nilherm {

bool is_complex_structure(const RMatrix& j) {
  if (j.rows() != j.cols()) return false;
  return RMatrix(j * j) == RMatrix(-RMatrix::Identity(j.rows(), j.cols()));
}

ComplexStructure::ComplexStructure(RMatrix j) : j_(std::move(j)) {
  if (!is_complex_structure(j_)) throw SemanticError("J^2=-I", "matrix does not square to -I");
}

RMatrix restrict_endomorphism(const RMatrix& j, const RMatrix& basis) {
  auto x = solve<Rational>(basis, RMatrix(j * basis));
  if (!x) throw PreconditionError("invariance", "subspace is not invariant under the endomorphism");
  return *x;
}

RMatrix restrict_endomorphism(const RMatrix& j, const Subspace& s) { return restrict_endomorphism(j, s.basis()); }

RVector nijenhuis(const LieAlgebra& l, const ComplexStructure& j, const RVector& x, const RVector& y) {
  const RVector jx = j(x), jy = j(y);
  return l.bracket(x, y) + j(RVector(l.bracket(jx, y) + l.bracket(x, jy))) - l.bracket(jx, jy);
}

namespace {

template <typename F>
std::optional<PairWitness> first_pair_failure(const LieAlgebra& l, F&& f) {
  const Index n = l.dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      RVector v = f(unit_vector<Rational>(n, a), unit_vector<Rational>(n, b));
      if (!is_zero_matrix(v)) return PairWitness{a, b, std::move(v)};
    }
  }
  return std::nullopt;
}

void require_dims(const LieAlgebra& l, const ComplexStructure& j) {
  if (l.dim() != j.dim()) throw PreconditionError("dimension", "complex structure and algebra sizes differ");
}

}  // namespace

std::optional<PairWitness> nijenhuis_witness(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  return first_pair_failure(l, [&](const RVector& x, const RVector& y) { return nijenhuis(l, j, x, y); });
}

bool is_integrable(const LieAlgebra& l, const ComplexStructure& j) { return !nijenhuis_witness(l, j); }

std::optional<PairWitness> abelian_witness(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  return first_pair_failure(l, [&](const RVector& x, const RVector& y) {
    return RVector(l.bracket(j(x), j(y)) - l.bracket(x, y));
  });
}

bool is_abelian_structure(const LieAlgebra& l, const ComplexStructure& j) { return !abelian_witness(l, j); }

std::optional<PairWitness> biinvariant_witness(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  return first_pair_failure(l, [&](const RVector& x, const RVector& y) {
    return RVector(l.bracket(j(x), y) - j(l.bracket(x, y)));
  });
}

bool is_biinvariant_structure(const LieAlgebra& l, const ComplexStructure& j) { return !biinvariant_witness(l, j); }

std::vector<Subspace> j_ascending_series(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  std::vector<Subspace> series{Subspace::zero(l.dim())};
  for (Index step = 0; step < l.dim(); ++step) {
    const Subspace p = bracket_preimage(l, series.back());
    Subspace next = intersection(p, j.apply(p));
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> j_nilpotent_step(const LieAlgebra& l, const ComplexStructure& j) {
  const auto series = j_ascending_series(l, j);
  if (!series.back().is_full()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_strongly_non_nilpotent(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  const Subspace z = center(l);
  return l.dim() > 0 && intersection(z, j.apply(z)).is_zero();
}

Subspace j_invariant_commutator(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  const Subspace d = commutator_ideal(l);
  return intersection(d, j.apply(d));
}

bool has_central_complex_abelian_factor(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  const Subspace z = center(l);
  const Subspace d = commutator_ideal(l);
  return !sum(d, j.apply(d)).contains(intersection(z, j.apply(z)));
}

JClassification classify(const LieAlgebra& l, const ComplexStructure& j) {
  require_dims(l, j);
  JClassification c;
  c.integrable = is_integrable(l, j);
  c.abelian = is_abelian_structure(l, j);
  c.biinvariant = is_biinvariant_structure(l, j);
  c.j_nilpotent_step = j_nilpotent_step(l, j);
  c.strongly_non_nilpotent = is_strongly_non_nilpotent(l, j);
  const Subspace z = center(l);
  const Subspace d = commutator_ideal(l);
  c.center_invariant = j.preserves(z);
  c.commutator_in_center = z.contains(j.apply(d));
  c.nj_dim = intersection(d, j.apply(d)).dim();
  c.central_complex_abelian_factor = !sum(d, j.apply(d)).contains(intersection(z, j.apply(z)));
  return c;
}

}  // namespace nilherm
