#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nilherm/hermitian.hpp"

namespace nilherm {

// Input of the 2-step assembly. Subspaces are in n0 coordinates; every
// endomorphism of v is written in the coordinates of v.basis().
//   psi_z1[i]   psi on the i-th basis vector of z1 (z1 is abstract, with Gram z1_gram)
//   psi_b[i]    psi on the i-th column of b.basis()
struct Complex2StepData {
  LieAlgebra n0;
  RMatrix g0;
  Subspace b;
  Subspace v;
  RMatrix jv;
  Index z1_dim = 0;
  RMatrix z1_gram;
  std::vector<RMatrix> psi_z1;
  std::vector<RMatrix> psi_b;
  Subspace p_plus, p_minus, a1;

  bool operator==(const Complex2StepData& o) const;
};

// (r, p+, p-, a1, n).
using TwoStepType = std::array<Index, 5>;
TwoStepType type_of(const Complex2StepData& d);
std::string to_string(const TwoStepType& t);

struct Violation {
  std::string clause;
  std::string detail;
};

// Clauses "(i)" .. "(iv)" and "shape"; empty when the data is valid.
std::vector<Violation> validate_2step_data(const Complex2StepData& d);

// j0 : b -> so(v) of n0, one matrix per b.basis() column.
std::vector<RMatrix> j0_maps(const Complex2StepData& d);

// Ambient basis of the assembled algebra: [J z1 | z1 | J b | b | v], with
// J z1_i and J b_i the i-th vectors of the first and third blocks.
struct TwoStepLayout {
  Index r, k, m;
  Index jz1() const { return 0; }
  Index z1() const { return r; }
  Index jb() const { return 2 * r; }
  Index b() const { return 2 * r + k; }
  Index v() const { return 2 * r + 2 * k; }
  Index dim() const { return 2 * r + 2 * k + m; }
};
TwoStepLayout layout_of(const Complex2StepData& d);

// The triple (n, J, <,>) determined by j on z0 = Jz1 + z1 + Jb + b.
// Throws SemanticError with the failing clause when the data is invalid,
// "j-injective" when n' is smaller than z1 + Jb + b, and "postcondition"
// if any asserted property of the result fails.
MetricComplexTriple build_from_2step_data(const Complex2StepData& d);

// Same bracket recipe with no validation and no postconditions; psi need not
// lie in u(n), so the result may be a non-integrable almost complex structure.
MetricComplexTriple assemble_2step_unchecked(const Complex2StepData& d);

// (n'_J)_+ , ker S on n'_J, and the orthogonal complement of their sum in n'_J.
struct NjDecomposition {
  Subspace plus;
  Subspace ker_s;
  Subspace rest;
};
NjDecomposition decompose_njprime(const MetricComplexTriple& t);

struct TwoStepExtraction {
  Complex2StepData data;
  // Columns: J z1, z1, J b, b, v0, J v0 in the ambient coordinates of t.
  RMatrix adapted_basis;
};

// Requires J integrable with J-step 2 and no central complex abelian factor.
TwoStepExtraction extract_2step_data(const MetricComplexTriple& t);

// t written in the basis given by the columns of p: bracket, P^-1 J P, P^T g P.
MetricComplexTriple change_basis(const MetricComplexTriple& t, const RMatrix& p);

bool same_triple(const MetricComplexTriple& a, const MetricComplexTriple& b);

// Random data of the requested type in canonical coordinates
// (n0 basis p+, p-, a1, v; standard J_v; block diagonal metric).
// Retries internally until the data validates and assembles.
Complex2StepData random_2step_data(const TwoStepType& type, std::uint64_t seed);

// n0 = R x + v with dim v = 2n and identity metric.
enum class TwoStepExample {
  Abelian,          // j0(x) in u(n), psi(x) = J_v
  BiInvariant,      // j0(x) anticommutes with J_v, psi = 0
  MinusWithPsi,     // j0(x) anticommutes with J_v, psi(x) = J_v
  Mixed,            // j0(x) neither, psi(x) = J_v
};
Complex2StepData example_2step_data(TwoStepExample kind, Index n = 2);

}  // namespace nilherm
