#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "nilherm/complex_structure.hpp"

namespace nilherm {

// Lie algebra with a complex structure and a compatible inner product (Gram
// matrix in the standard basis). Validated on construction.
class MetricComplexTriple {
 public:
  MetricComplexTriple(LieAlgebra l, ComplexStructure j, RMatrix g);

  const LieAlgebra& algebra() const { return l_; }
  const ComplexStructure& J() const { return j_; }
  const RMatrix& gram() const { return g_; }
  Index dim() const { return l_.dim(); }
  Rational inner(const RVector& x, const RVector& y) const { return (x.transpose() * g_ * y)(0, 0); }

 private:
  LieAlgebra l_;
  ComplexStructure j_;
  RMatrix g_;
};

bool is_hermitian(const ComplexStructure& j, const RMatrix& g);
// h + J^T h J, positive definite and J-Hermitian whenever h is positive definite.
RMatrix hermitian_average(const ComplexStructure& j, const RMatrix& h);

// The bracket n x n -> z0 encoded as j : z0 -> so(v), <j(z)v, w> = <z, [v, w]>.
// Matrices act on coordinates in the columns of v_basis.
struct JMapPackage {
  Subspace z0;
  Subspace v;
  RMatrix v_basis;
  RMatrix v_gram;
  std::vector<RMatrix> j;  // one per column of z0.basis()
  Subspace kernel_of_j;

  // j(z) for an ambient vector z in z0.
  RMatrix at(const RVector& z) const;
  // Coordinates (in v_basis) of an ambient vector of v, and back.
  RVector to_v(const RVector& x) const;
  RVector from_v(const RVector& c) const { return v_basis * c; }
};

// Requires n' ⊆ z0 ⊆ z; throws PreconditionError("sandwich") otherwise.
JMapPackage j_map(const LieAlgebra& l, const RMatrix& gram, const Subspace& z0);
// Same, with a caller-chosen basis of v = z0^⊥ (columns).
JMapPackage j_map(const LieAlgebra& l, const RMatrix& gram, const Subspace& z0, const RMatrix& v_basis);
JMapPackage j_map(const MetricComplexTriple& t, const Subspace& z0);

// S(z) = j(Jz) - J_v j(z) for each z0 basis vector. Requires z0 J-invariant.
std::vector<RMatrix> s_map(const JMapPackage& pkg, const ComplexStructure& j);
RMatrix restrict_to_v(const JMapPackage& pkg, const ComplexStructure& j);

// T_+ = (T - J T J)/2 commutes with J, T_- = (T + J T J)/2 anticommutes.
std::pair<RMatrix, RMatrix> plus_minus_parts(const RMatrix& t, const RMatrix& jv);

// J integrable iff every S(z) commutes with J_v; needs J n' ⊆ z and z0 = n' + J n'.
bool integrability_via_S(const LieAlgebra& l, const ComplexStructure& j, const RMatrix& gram);
bool integrability_via_S(const MetricComplexTriple& t);
bool integrability_via_S(const MetricComplexTriple& t, const Subspace& z0);

// Alternating form stored by its strictly increasing index tuples; zero entries absent.
template <std::size_t K>
struct AlternatingForm {
  Index dim = 0;
  std::map<std::array<Index, K>, Rational> entries;

  Rational at(const std::array<Index, K>& idx) const {
    auto it = entries.find(idx);
    return it == entries.end() ? Rational(0) : it->second;
  }
  bool is_zero() const { return entries.empty(); }
  bool operator==(const AlternatingForm& o) const { return dim == o.dim && entries == o.entries; }
};

using ThreeForm = AlternatingForm<3>;
using FourForm = AlternatingForm<4>;

// c(x,y,z) = -<[Jx,Jy],z> - <[Jy,Jz],x> - <[Jz,Jx],y>; antisymmetry is asserted.
ThreeForm torsion_three_form(const MetricComplexTriple& t);
// Term-by-term expansion of dc in terms of brackets and J.
FourForm dc_four_form(const MetricComplexTriple& t);
// Chevalley-Eilenberg differential of a 3-form:
// dc(x0,x1,x2,x3) = sum_{p<q} (-1)^{p+q} c([x_p,x_q], x_r, x_s).
FourForm chevalley_eilenberg_d(const LieAlgebra& l, const ThreeForm& c);

bool is_pluriclosed(const MetricComplexTriple& t);

struct FormWitness {
  std::vector<Index> indices;
  Rational value;
};

// Evaluates the six-term 2-step condition on basis quadruples. Requires a
// 2-step algebra and J integrable with J-step 2.
std::optional<FormWitness> pluriclosed_2step_violation(const MetricComplexTriple& t);
bool pluriclosed_criterion_2step(const MetricComplexTriple& t);

// j([u,y])z + j([y,z])u + j([z,u])y on basis triples of v = z^⊥, with z0 = z.
// Requires J abelian on a 2-step algebra. Indices refer to the v basis.
struct TripleWitness {
  Index a, b, c;
  RVector value;
};
std::optional<TripleWitness> pluriclosed_abelian_violation(const MetricComplexTriple& t);
bool pluriclosed_criterion_abelian(const MetricComplexTriple& t);

// z ⊆ {y : [y,Jy] = 0} exactly, then [y,Jy] != 0 on pseudo-random y outside z.
// The second half is a sampling test; the report says so.
struct CenterSamplingReport {
  bool inclusion_holds = false;
  bool sampling_passed = false;
  std::uint64_t seed = 0;
  int samples = 0;
  std::optional<RVector> counterexample;
  bool passed() const { return inclusion_holds && sampling_passed; }
};
CenterSamplingReport pluriclosed_center_sampling_check(const MetricComplexTriple& t, std::uint64_t seed,
                                                       int samples = 200);

}  // namespace nilherm
