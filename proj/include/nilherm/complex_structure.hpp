#pragma once

#include <optional>

#include "nilherm/lie_algebra.hpp"

namespace nilherm {

// Endomorphism with J^2 = -I (checked on construction).
class ComplexStructure {
 public:
  ComplexStructure() = default;
  explicit ComplexStructure(RMatrix j);

  const RMatrix& matrix() const { return j_; }
  Index dim() const { return j_.rows(); }
  RVector operator()(const RVector& x) const { return j_ * x; }
  Subspace apply(const Subspace& s) const { return image(j_, s); }
  bool preserves(const Subspace& s) const { return s.contains(apply(s)); }

  bool operator==(const ComplexStructure& o) const { return j_ == o.j_; }

 private:
  RMatrix j_;
};

bool is_complex_structure(const RMatrix& j);

// Matrix of j on the invariant subspace s, in the basis s.basis().
RMatrix restrict_endomorphism(const RMatrix& j, const Subspace& s);
RMatrix restrict_endomorphism(const RMatrix& j, const RMatrix& basis);

// [x,y] + J([Jx,y] + [x,Jy]) - [Jx,Jy].
RVector nijenhuis(const LieAlgebra& l, const ComplexStructure& j, const RVector& x, const RVector& y);

// A basis pair (i, j), i < j, where a bilinear identity fails, with the value.
struct PairWitness {
  Index i, j;
  RVector value;
};

std::optional<PairWitness> nijenhuis_witness(const LieAlgebra& l, const ComplexStructure& j);
bool is_integrable(const LieAlgebra& l, const ComplexStructure& j);
// [Jx, Jy] = [x, y].
std::optional<PairWitness> abelian_witness(const LieAlgebra& l, const ComplexStructure& j);
bool is_abelian_structure(const LieAlgebra& l, const ComplexStructure& j);
// [Jx, y] = J[x, y].
std::optional<PairWitness> biinvariant_witness(const LieAlgebra& l, const ComplexStructure& j);
bool is_biinvariant_structure(const LieAlgebra& l, const ComplexStructure& j);

// a_0 = 0, a_l = {x : [x, g] and [Jx, g] in a_{l-1}}, until it repeats.
std::vector<Subspace> j_ascending_series(const LieAlgebra& l, const ComplexStructure& j);
// Least s with a_s = g; empty when the series stalls below g.
std::optional<int> j_nilpotent_step(const LieAlgebra& l, const ComplexStructure& j);
bool is_strongly_non_nilpotent(const LieAlgebra& l, const ComplexStructure& j);

// n'_J = n' ∩ J n'.
Subspace j_invariant_commutator(const LieAlgebra& l, const ComplexStructure& j);
// True iff z ∩ Jz is not contained in n' + Jn'.
bool has_central_complex_abelian_factor(const LieAlgebra& l, const ComplexStructure& j);

struct JClassification {
  bool integrable = false;
  bool abelian = false;
  bool biinvariant = false;
  std::optional<int> j_nilpotent_step;
  bool strongly_non_nilpotent = false;
  bool center_invariant = false;
  bool commutator_in_center = false;  // J n' ⊆ z
  Index nj_dim = 0;
  bool central_complex_abelian_factor = false;
};

JClassification classify(const LieAlgebra& l, const ComplexStructure& j);

}  // namespace nilherm
