#pragma once

#include <optional>
#include <string>

#include "nilherm/complex_structure.hpp"

namespace nilherm {

struct HypercomplexStructure {
  ComplexStructure j1, j2, j3;
  const ComplexStructure& operator[](int alpha) const { return alpha == 0 ? j1 : alpha == 1 ? j2 : j3; }
};

struct HypercomplexViolation {
  std::string relation;  // "J1J2=J3", "J2J1=-J3" or "N_J<alpha>"
  std::optional<PairWitness> witness;
};

// Quaternion relations J1J2 = -J2J1 = J3 and integrability of each J_alpha.
std::optional<HypercomplexViolation> validate_hypercomplex(const LieAlgebra& l, const HypercomplexStructure& h);

bool is_abelian_hypercomplex(const LieAlgebra& l, const HypercomplexStructure& h);
bool is_hyper_hermitian(const HypercomplexStructure& h, const RMatrix& g);

// Basis triple (i<j<k) where the three cyclic sums <[J_a x, J_a y], z> + cyclic disagree.
struct HktWitness {
  Index i, j, k;
  Rational values[3];
};
std::optional<HktWitness> hkt_violation(const LieAlgebra& l, const HypercomplexStructure& h, const RMatrix& g);
// Requires g hyper-Hermitian (PreconditionError otherwise).
bool is_hkt(const LieAlgebra& l, const HypercomplexStructure& h, const RMatrix& g);

}  // namespace nilherm
