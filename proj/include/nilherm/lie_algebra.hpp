#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilherm/subspace.hpp"

namespace nilherm {

// [e_i, e_j] = sum_k coeffs[k] e_k, zero-based, i != j.
struct BracketEntry {
  Index i = 0;
  Index j = 0;
  RVector coeffs;
};

struct JacobiViolation {
  Index i, j, k;
  RVector value;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Throws SemanticError("jacobi") with the offending basis triple.
  LieAlgebra(Index dim, const std::vector<BracketEntry>& brackets, std::string name = {});

  static LieAlgebra abelian(Index dim, std::string name = {});

  Index dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  RVector bracket(Index i, Index j) const;
  RVector bracket(const RVector& x, const RVector& y) const;
  // Matrix of x -> [x, e_k].
  const RMatrix& right_multiplication(Index k) const { return right_[static_cast<std::size_t>(k)]; }
  // Matrix of y -> [x, y].
  RMatrix ad(const RVector& x) const;

  // Nonzero [e_i, e_j] with i < j.
  std::vector<BracketEntry> brackets() const;
  bool is_abelian() const;

  // Same algebra written in the basis given by the columns of p.
  LieAlgebra change_basis(const RMatrix& p) const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && right_ == o.right_; }

 private:
  using Sparse = std::vector<std::pair<Index, Rational>>;
  const Sparse& entry(Index i, Index j) const { return table_[static_cast<std::size_t>(i * dim_ + j)]; }
  void accumulate_bracket(const RVector& x, Index k, const Rational& scale, RVector& out) const;

  Index dim_ = 0;
  std::string name_;
  std::vector<Sparse> table_;
  std::vector<RMatrix> right_;
};

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& l);

Subspace commutator_ideal(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);
// {x : [x, g] in target}.
Subspace bracket_preimage(const LieAlgebra& l, const Subspace& target);
// z_0 = 0, z_1 = center, ... up to the first repetition.
std::vector<Subspace> ascending_central_series(const LieAlgebra& l);
std::vector<Subspace> lower_central_series(const LieAlgebra& l);
// Smallest s with z_s = g (0 for the zero algebra). Throws SemanticError("not-nilpotent").
int nilpotency_step(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
bool is_two_step(const LieAlgebra& l);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct AlgebraReport {
  Index dim = 0;
  Index commutator_dim = 0;
  Index center_dim = 0;
  Index first_betti = 0;
  std::optional<int> step;
  std::vector<Index> ascending_series_dims;
  std::vector<Index> lower_series_dims;
};

AlgebraReport analyze_algebra(const LieAlgebra& l);

}  // namespace nilherm
