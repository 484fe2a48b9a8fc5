#pragma once

#include <vector>

#include "nilherm/two_step_data.hpp"

namespace nilherm {

// Ingredients of the 3-step assembly on n = h + q + v, h = z1 + z2 + u.
// Ambient order of the assembled algebra: [z1 | z2 | u | q | v].
//   alpha[s](a, c)  q_s-component of [v_a, v_c]     (skew in a, c)
//   mu[t](a, c)     z1_t-component of [v_a, v_c]
//   rho[i]          q x v matrix of v -> [u_i, v]
// j1 acts on h in the coordinates [z1 | z2 | u] and must send z1 into z2 + u.
struct Complex3StepData {
  Index dim_v = 0, dim_q = 0, dim_z1 = 0, dim_z2 = 0, dim_u = 0;
  RMatrix jv, j0, j1;
  std::vector<RMatrix> alpha;
  std::vector<RMatrix> mu;
  std::vector<RMatrix> rho;
  RMatrix gram;

  Index dim_h() const { return dim_z1 + dim_z2 + dim_u; }
  Index dim() const { return dim_h() + dim_q + dim_v; }
  bool operator==(const Complex3StepData& o) const;
};

// Clauses "shape", "metric", "(i)" rho injective and complex linear,
// "(ii)" J0 + Jv integrable of step <= 2 on (q + v, alpha),
// "(iii)" mu != 0 and J1 + Jv abelian on (h + v, mu).
std::vector<Violation> validate_3step_data(const Complex3StepData& d);

// With R the sum of the images of rho(u_i): mu maps {y : alpha(y) in R} onto
// z1, and q ⊆ alpha(ker mu) + R. Together they say n' = z1 + q.
struct SurjectivityReport {
  bool z1_reached = false;
  bool q_reached = false;
  bool holds() const { return z1_reached && q_reached; }
};
SurjectivityReport surjectivity_conditions(const Complex3StepData& d);

// The algebras (q + v, alpha) and (h + v, mu) with their structures.
LieAlgebra alpha_algebra(const Complex3StepData& d);
LieAlgebra mu_algebra(const Complex3StepData& d);

// Throws the failing clause; asserts J integrable of step 3, and n' = z1 + q,
// n'_J = q whenever the surjectivity conditions hold.
MetricComplexTriple build_from_3step_data(const Complex3StepData& d);

struct ThreeStepExtraction {
  Complex3StepData data;
  // Columns z1, z2, u, q = n'_J, v in ambient coordinates.
  RMatrix adapted_basis;
};
// Requires a 2-step algebra with J integrable of step 3.
ThreeStepExtraction extract_3step_data(const MetricComplexTriple& t);

// The family on dim 2n: dim v = 2n - 4, q = span(f1, f2), J0 f1 = f2,
// mu(e_k, e_{k+n-2}) = x, J1 x = y, u = R y and rho(y) built from (a_i, b_i).
// alpha comes from the 2-step example family on q + v (with_alpha) or is 0.
Complex3StepData example_3step_data(Index n = 3, std::vector<Rational> a = {}, std::vector<Rational> b = {},
                                    bool with_alpha = true);

}  // namespace nilherm
