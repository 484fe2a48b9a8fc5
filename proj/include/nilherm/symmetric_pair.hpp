#pragma once

#include <optional>

#include "nilherm/representations.hpp"

namespace nilherm {

// B(x, y) = tr(ad x ad y).
RMatrix killing_form(const LieAlgebra& g);

// su(2) ⊕ su(2) with basis A1, A2, A3, B1, B2, B3.
LieAlgebra su2xsu2();
// span(A_i + B_i) in su2xsu2().
Subspace su2_diagonal();

// n(g, h) = h + m with [z + x, z' + x'] = [x, x']_g in the basis [h | m] given by
// the columns of `basis` (g coordinates), with inner product -B.
struct SymmetricPairAlgebra {
  LieAlgebra g;
  Index dim_h = 0;
  RMatrix basis;
  MetricLieAlgebra n;
  bool irreducible = false;
};

// Checks, by clause: "compact" (B negative definite), "subalgebra",
// "[h,m]⊆m", "[m,m]⊆h". When h acts irreducibly on m, asserts center = h and
// j(z) = ad z restricted to m.
SymmetricPairAlgebra symmetric_pair_nilalgebra(const LieAlgebra& g, const Subspace& h);

// R^s ⊕ n(g, h), s = dim h mod 2, ambient order [R^s | h | m]. j_m acts on m in
// the coordinates of the m columns; j1 on [R^s | h]. The padding vector has
// squared norm padding_norm (default: the first diagonal entry of -B on h).
// Checks "J_m" (square, orthogonality, commuting with ad h), "Hermit-symm"
// ([J x, J y] = [x, y] on m) and "J1"; asserts J abelian and the metric pluriclosed.
MetricComplexTriple hermitian_symmetric_J(const SymmetricPairAlgebra& pair, const RMatrix& j_m, const RMatrix& j1,
                                          std::optional<Rational> padding_norm = {});

// su(2) with h = R X1: J X2 = X3 on m and J w0 = X1 on R ⊕ h, dimension 4.
MetricComplexTriple su2_u1_hermitian_triple();

}  // namespace nilherm
