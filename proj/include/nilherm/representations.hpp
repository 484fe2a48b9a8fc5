#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilherm/hermitian.hpp"
#include "nilherm/hypercomplex.hpp"

namespace nilherm {

struct MetricLieAlgebra {
  LieAlgebra algebra;
  RMatrix gram;
};

// A representation is given by pi[i], the action of the i-th basis vector of h.
// Throws "representation" unless pi([x_i, x_j]) = [pi(x_i), pi(x_j)].
void check_representation(const LieAlgebra& h, const std::vector<RMatrix>& pi);

// Basis of {T : T pi(x) = pi(x) T for all x}.
std::vector<RMatrix> commutant(const std::vector<RMatrix>& pi, Index dim);

enum class RepType { Real, Complex, Quaternionic };
std::string to_string(RepType t);

// Requires every pi(x) skew for gram ("invariant-metric"). Irreducible exactly when
// the self-adjoint commutant elements are the scalars; the type is then read
// off the commutant dimension 1, 2, 4. Throws "not-irreducible" otherwise.
bool is_irreducible(const std::vector<RMatrix>& pi, const RMatrix& gram);
RepType irreducible_type(const std::vector<RMatrix>& pi, const RMatrix& gram);

// W^{⊕r}: copy c occupies coordinates [c dim W, (c + 1) dim W), with the
// block diagonal metric built from gram_w.
struct IsotypicBlock {
  std::vector<RMatrix> pi_w;
  Index multiplicity = 1;
  RMatrix gram_w;

  Index dim_w() const { return gram_w.rows(); }
  Index dim() const { return dim_w() * multiplicity; }
  std::vector<RMatrix> pi() const;
  RMatrix gram() const;
};

// Commutes with the block action, orthogonal, J^2 = -I. Real type needs even
// multiplicity ("NoInvariantComplexStructure"). Complex and quaternionic types
// use a normalized skew commutant element, which must have a rational norm
// ("irrational-normalization").
RMatrix invariant_complex_on_isotypic(const IsotypicBlock& b);

// J1 J2 = -J2 J1 = J3, each commuting with the block action and orthogonal.
// Real type needs multiplicity divisible by 4, complex type even multiplicity
// ("NoInvariantTriple").
std::array<RMatrix, 3> invariant_quaternionic_triple(const IsotypicBlock& b);

// n = h + V with [v, w] in h determined by <[v, w], x>_h = <pi(x) v, w>_V.
// Checks, by clause: "representation", "metric", "ad-invariant", "skew",
// "trivial-subrepresentation", "faithful". Asserts center = h and j(x) = pi(x).
MetricLieAlgebra naturally_reductive(const LieAlgebra& h, const std::vector<RMatrix>& pi, const RMatrix& gram_h,
                                     const RMatrix& gram_v);

// R^s ⊕ N(h, V) with V the orthogonal sum of the blocks, ambient order
// [R^s | h | V]. The padding vectors get squared norm padding_norm, or the
// first diagonal entry of gram_h when unset. gram_h must be diagonal so that
// J on R^s ⊕ h can pair basis vectors; "J_z" when the norms do not allow it.
struct NaturallyReductiveSpace {
  MetricLieAlgebra metric;
  Index padding = 0;
  Index dim_h = 0;
};
NaturallyReductiveSpace padded_naturally_reductive(const LieAlgebra& h, const RMatrix& gram_h,
                                                   const std::vector<IsotypicBlock>& blocks, Index padding,
                                                   std::optional<Rational> padding_norm = {});

// s = dim h mod 2; orthogonal abelian J, asserted.
MetricComplexTriple natred_complex(const LieAlgebra& h, const RMatrix& gram_h, const std::vector<IsotypicBlock>& blocks,
                                   std::optional<Rational> padding_norm = {});

struct HypercomplexTriple {
  LieAlgebra algebra;
  HypercomplexStructure structure;
  RMatrix gram;
};
// s = 4 - j with dim h ≡ j (mod 4), 1 <= j <= 4; abelian hypercomplex and
// hyper-Hermitian, asserted.
HypercomplexTriple natred_hypercomplex(const LieAlgebra& h, const RMatrix& gram_h,
                                       const std::vector<IsotypicBlock>& blocks,
                                       std::optional<Rational> padding_norm = {});

// [X1, X2] = X3 and cyclic.
LieAlgebra su2();
// pi(X_a) = left multiplication by i, j, k divided by 2, on H = R^4 with basis 1, i, j, k.
std::vector<RMatrix> su2_quaternionic_rep();
std::vector<RMatrix> adjoint_rep(const LieAlgebra& l);
// 2x2 rotation generator, a representation of the abelian R.
std::vector<RMatrix> rotation_rep();

}  // namespace nilherm
