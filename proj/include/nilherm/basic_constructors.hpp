#pragma once

#include <string>

#include "nilherm/hermitian.hpp"

namespace nilherm {

// Basis e_1..e_m, f_1..f_m, z with [e_i, f_i] = z.
LieAlgebra heisenberg(Index m);

// V ⊕ Λ²V, basis: V first, then e_i∧e_j in lexicographic order.
LieAlgebra free_two_step(Index r);
// Position of e_i∧e_j (i < j, zero-based in V) in the basis of free_two_step(r).
Index wedge_index(Index r, Index i, Index j);

struct AlgebraWithJ {
  LieAlgebra algebra;
  ComplexStructure J;
};

// The explicit structures on f_r (r ≡ 0, 3 mod 4) and on R w0 ⊕ f_r
// (r ≡ 1, 2 mod 4, w0 first in the basis). V is ordered v_0 (when present),
// v_1.., w_1...
AlgebraWithJ free_complex_structure(Index r);

// R^{2k+1} ⊕ h_{2m+1} with basis w, a_1..a_2k, x_1..x_m, y_1..y_m, z,
// J x_i = y_i, J z = w, J a_{2i-1} = a_{2i}; identity metric.
MetricComplexTriple standard_abelian_triple(Index k, Index m);

// The six-dimensional 2-step nilpotent algebras, rows 1..7.
const std::string& table1_salamon(int row);
const std::string& table1_name(int row);
LieAlgebra table1_algebra(int row);

// Complex structure from pairs (a_i, b_i) with J a_i = b_i, J b_i = -a_i,
// provided the a's and b's together form a basis.
ComplexStructure complex_structure_from_pairs(const std::vector<std::pair<RVector, RVector>>& pairs);

}  // namespace nilherm
