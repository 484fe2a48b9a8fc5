#include <gtest/gtest.h>

#include "nilherm/basic_constructors.hpp"
#include "nilherm/random.hpp"
#include "nilherm/salamon.hpp"
#include "nilherm/two_step_data.hpp"
#include "test_util.hpp"

using namespace nilherm;
using namespace nilherm::testing;

namespace {

std::vector<Index> dims(const std::vector<Subspace>& series) {
  std::vector<Index> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

// Catalog used by the structural properties below.
std::vector<LieAlgebra> catalog() {
  std::vector<LieAlgebra> out;
  for (int row = 1; row <= 7; ++row) out.push_back(table1_algebra(row));
  for (Index m = 1; m <= 3; ++m) out.push_back(heisenberg(m));
  for (Index r = 2; r <= 5; ++r) out.push_back(free_two_step(r));
  out.push_back(LieAlgebra::abelian(4));
  out.push_back(parse_salamon("(0,0,12,13)"));
  out.push_back(parse_salamon("(0,0,12,13,14)"));
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    out.push_back(build_from_2step_data(random_2step_data({1, 1, 1, 1, 3}, seed)).algebra());
  return out;
}

}  // namespace

TEST(Bracket, HeisenbergThree) {
  const LieAlgebra h3 = heisenberg(1);
  EXPECT_EQ(h3.dim(), 3);
  EXPECT_EQ(h3.bracket(0, 1), rv({0, 0, 1}));
  EXPECT_EQ(h3.bracket(1, 0), rv({0, 0, -1}));
  EXPECT_EQ(h3.bracket(0, 2), rv({0, 0, 0}));
}

TEST(Bracket, Antisymmetry) {
  const LieAlgebra f3 = free_two_step(3);
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    const RVector x = rng.vector(6, 4);
    EXPECT_TRUE(is_zero_matrix(f3.bracket(x, x)));
    const RVector y = rng.vector(6, 4);
    EXPECT_EQ(f3.bracket(x, y), RVector(-f3.bracket(y, x)));
    EXPECT_EQ(RVector(f3.ad(x) * y), f3.bracket(x, y));
  }
}

TEST(Bracket, FreeBilinearExpansion) {
  const LieAlgebra f3 = free_two_step(3);
  EXPECT_EQ(f3.bracket(rv({1, 1, 0, 0, 0, 0}), rv({0, 1, 0, 0, 0, 0})), RVector(unit_vector<Rational>(6, wedge_index(3, 0, 1))));
}

TEST(Jacobi, HeisenbergPasses) { EXPECT_FALSE(find_jacobi_violation(heisenberg(1))); }

TEST(Jacobi, DerivationExtensionPasses) {
  // [e1,e2] = e3, [e1,e3] = e2: ad e1 is a derivation of the abelian span(e2, e3).
  const std::vector<BracketEntry> entries = {{0, 1, rv({0, 0, 1})}, {0, 2, rv({0, 1, 0})}};
  EXPECT_NO_THROW(LieAlgebra(3, entries));
}

TEST(Jacobi, ViolationIsReported) {
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = -e1 + e1 - e1 = -e1.
  const std::vector<BracketEntry> entries = {{0, 1, rv({1, 0, 0})}, {0, 2, rv({1, 0, 0})}, {1, 2, rv({0, 1, 0})}};
  try {
    LieAlgebra bad(3, entries);
    FAIL() << "expected a Jacobi violation";
  } catch (const SemanticError& e) {
    EXPECT_EQ(e.clause(), "jacobi");
    EXPECT_NE(std::string(e.what()).find("(e1, e2, e3)"), std::string::npos) << e.what();
  }
}

TEST(Jacobi, TwoStepTablesPass) {
  Rng rng(3);
  // Brackets of V = e1..e4 landing in the central e5, e6.
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < 4; ++i)
    for (Index j = i + 1; j < 4; ++j) {
      RVector c = RVector::Zero(6);
      c(4) = rng.small(2);
      c(5) = rng.small(2);
      entries.push_back({i, j, c});
    }
  EXPECT_NO_THROW(LieAlgebra(6, entries));
}

TEST(Ideals, HeisenbergFive) {
  const LieAlgebra h5 = heisenberg(2);
  EXPECT_EQ(commutator_ideal(h5).dim(), 1);
  EXPECT_EQ(center(h5).dim(), 1);
  EXPECT_EQ(center(h5), commutator_ideal(h5));
}

TEST(Ideals, AbelianAndFree) {
  const LieAlgebra a = LieAlgebra::abelian(5);
  EXPECT_TRUE(commutator_ideal(a).is_zero());
  EXPECT_TRUE(center(a).is_full());
  const LieAlgebra f3 = free_two_step(3);
  EXPECT_EQ(commutator_ideal(f3).dim(), 3);
  EXPECT_EQ(center(f3).dim(), 3);
}

TEST(Series, Examples) {
  EXPECT_EQ(dims(ascending_central_series(heisenberg(1))), (std::vector<Index>{0, 1, 3}));
  EXPECT_EQ(nilpotency_step(heisenberg(1)), 2);
  EXPECT_EQ(dims(ascending_central_series(LieAlgebra::abelian(3))), (std::vector<Index>{0, 3}));
  EXPECT_EQ(nilpotency_step(LieAlgebra::abelian(3)), 1);
  EXPECT_EQ(dims(ascending_central_series(free_two_step(3))), (std::vector<Index>{0, 3, 6}));
  EXPECT_EQ(nilpotency_step(free_two_step(3)), 2);
  const LieAlgebra filiform = parse_salamon("(0,0,12,13)");
  EXPECT_EQ(nilpotency_step(filiform), 3);
  EXPECT_EQ(dims(lower_central_series(filiform)), (std::vector<Index>{4, 2, 1, 0}));
}

TEST(Series, NonNilpotent) {
  // [e1, e2] = e2.
  const LieAlgebra aff(2, {{0, 1, rv({0, 1})}});
  EXPECT_FALSE(is_nilpotent(aff));
  EXPECT_THROW(nilpotency_step(aff), SemanticError);
}

TEST(Salamon, ParseExamples) {
  const LieAlgebra hh = parse_salamon("(0,0,0,0,12,34)", 6);
  EXPECT_EQ(hh.bracket(0, 1), RVector(unit_vector<Rational>(6, 4)));
  EXPECT_EQ(hh.bracket(2, 3), RVector(unit_vector<Rational>(6, 5)));
  EXPECT_EQ(commutator_ideal(hh).dim(), 2);
  EXPECT_EQ(center(hh).dim(), 2);
  const LieAlgebra semi = parse_salamon("(0,0,0,0,12,14+23)", 6);
  EXPECT_EQ(commutator_ideal(semi).dim(), 2);
  EXPECT_EQ(center(semi).dim(), 2);
  EXPECT_TRUE(parse_salamon("(0,0,0)", 3).is_abelian());
}

TEST(Salamon, Coefficients) {
  const LieAlgebra l = parse_salamon("(0,0,-1/2*12+212)");
  EXPECT_EQ(l.bracket(0, 1), (RVector(3) << Rational(0), Rational(0), Rational(3, 2)).finished());
}

TEST(Salamon, ParseErrors) {
  EXPECT_THROW(parse_salamon("(0,0,12", 3), ParseError);
  EXPECT_THROW(parse_salamon("(0,0,12)", 4), ParseError);
  EXPECT_THROW(parse_salamon("(0,0,1x)"), ParseError);
  EXPECT_THROW(parse_salamon("(0,0,14)"), ParseError);
  EXPECT_THROW(parse_salamon("(0,0,11)"), ParseError);
}

TEST(Salamon, RoundTrip) {
  for (int row = 1; row <= 7; ++row) {
    const LieAlgebra l = table1_algebra(row);
    const std::string s = to_salamon(l);
    EXPECT_EQ(parse_salamon(s, 6), l) << s;
  }
  EXPECT_EQ(to_salamon(LieAlgebra::abelian(4)), "(0,0,0,0)");
  EXPECT_EQ(to_salamon(heisenberg(1)), "(0,0,12)");
}

TEST(DirectSum, Examples) {
  const LieAlgebra r_h3 = direct_sum(LieAlgebra::abelian(1), heisenberg(1));
  EXPECT_EQ(r_h3.dim(), 4);
  EXPECT_EQ(commutator_ideal(r_h3).dim(), 1);
  EXPECT_EQ(center(r_h3).dim(), 2);
  const LieAlgebra r3_h3 = direct_sum(LieAlgebra::abelian(3), heisenberg(1));
  EXPECT_EQ(commutator_ideal(r3_h3).dim(), 1);
  EXPECT_EQ(center(r3_h3).dim(), 4);
  const LieAlgebra f3 = free_two_step(3);
  EXPECT_EQ(direct_sum(f3, LieAlgebra::abelian(0)), f3);
}

TEST(Report, Examples) {
  const AlgebraReport f3 = analyze_algebra(table1_algebra(1));
  EXPECT_EQ(f3.dim, 6);
  EXPECT_EQ(f3.commutator_dim, 3);
  EXPECT_EQ(f3.center_dim, 3);
  EXPECT_EQ(f3.step, 2);
  EXPECT_EQ(f3.first_betti, 3);
  const AlgebraReport r6 = analyze_algebra(LieAlgebra::abelian(6));
  EXPECT_EQ(r6.commutator_dim, 0);
  EXPECT_EQ(r6.center_dim, 6);
  EXPECT_EQ(r6.step, 1);
  EXPECT_EQ(r6.first_betti, 6);
  const AlgebraReport rh5 = analyze_algebra(direct_sum(LieAlgebra::abelian(1), heisenberg(2)));
  EXPECT_EQ(rh5.dim, 6);
  EXPECT_EQ(rh5.commutator_dim, 1);
  EXPECT_EQ(rh5.center_dim, 2);
  EXPECT_EQ(rh5.step, 2);
  EXPECT_EQ(rh5.first_betti, 5);
}

TEST(Report, SixDimensionalTwoStepList) {
  const std::vector<std::pair<Index, Index>> expected = {{3, 3}, {2, 2}, {2, 2}, {2, 2}, {2, 3}, {1, 2}, {1, 4}};
  for (int row = 1; row <= 7; ++row) {
    const AlgebraReport r = analyze_algebra(table1_algebra(row));
    EXPECT_EQ(std::make_pair(r.commutator_dim, r.center_dim), expected[static_cast<std::size_t>(row - 1)]) << row;
    EXPECT_EQ(r.step, 2) << row;
  }
}

TEST(Properties, CommutatorInCenterIffStepAtMostTwo) {
  for (const auto& l : catalog()) {
    const bool inside = center(l).contains(commutator_ideal(l));
    EXPECT_EQ(inside, nilpotency_step(l) <= 2) << to_salamon(l);
    EXPECT_EQ(is_two_step(l), nilpotency_step(l) == 2);
  }
}

TEST(Properties, IdealsMissingCommutatorAreCentral) {
  int checked = 0;
  for (const auto& l : catalog()) {
    if (!is_two_step(l)) continue;
    const Index n = l.dim();
    const Subspace np = commutator_ideal(l);
    const Subspace z = center(l);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      Rng rng(seed * 31 + static_cast<std::uint64_t>(n));
      // Half the generators come from z ∩ n'^⊥ so that some ideals avoid n'.
      const Subspace free_center = intersection(z, orthogonal_complement(np));
      RMatrix gens = rng.matrix(n, rng.uniform(1, 2), 1);
      if (seed % 2 == 0 && !free_center.is_zero())
        gens = RMatrix(free_center.basis() * rng.matrix(free_center.dim(), 1, 2));
      // s + [s, g] is an ideal in a 2-step algebra.
      RMatrix cols = gens;
      for (Index c = 0; c < gens.cols(); ++c)
        for (Index k = 0; k < n; ++k) {
          cols.conservativeResize(n, cols.cols() + 1);
          cols.col(cols.cols() - 1) = l.bracket(RVector(gens.col(c)), RVector(unit_vector<Rational>(n, k)));
        }
      const Subspace a = Subspace::span(cols);
      for (Index k = 0; k < n; ++k)
        ASSERT_TRUE(a.contains(image(l.right_multiplication(k), a)));
      if (!intersection(a, np).is_zero()) continue;
      EXPECT_TRUE(z.contains(a));
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(ChangeBasis, PreservesInvariants) {
  Rng rng(11);
  const LieAlgebra l = table1_algebra(2);
  const LieAlgebra m = l.change_basis(rng.invertible(6, 2));
  EXPECT_EQ(commutator_ideal(m).dim(), 2);
  EXPECT_EQ(center(m).dim(), 2);
  EXPECT_EQ(nilpotency_step(m), 2);
}
