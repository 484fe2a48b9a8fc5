#include <gtest/gtest.h>

#include "nilherm/basic_constructors.hpp"
#include "nilherm/salamon.hpp"
#include "test_util.hpp"

using namespace nilherm;
using namespace nilherm::testing;

TEST(Heisenberg, Dimensions) {
  EXPECT_EQ(heisenberg(1), parse_salamon("(0,0,12)"));
  const AlgebraReport h5 = analyze_algebra(heisenberg(2));
  EXPECT_EQ(h5.dim, 5);
  EXPECT_EQ(h5.commutator_dim, 1);
  EXPECT_EQ(h5.center_dim, 1);
  EXPECT_EQ(h5.step, 2);
  const AlgebraReport rh5 = analyze_algebra(direct_sum(LieAlgebra::abelian(1), heisenberg(2)));
  const AlgebraReport row6 = analyze_algebra(table1_algebra(6));
  EXPECT_EQ(rh5.commutator_dim, row6.commutator_dim);
  EXPECT_EQ(rh5.center_dim, row6.center_dim);
  EXPECT_THROW(heisenberg(0), PreconditionError);
}

TEST(FreeTwoStep, Dimensions) {
  EXPECT_EQ(free_two_step(2), heisenberg(1));
  const AlgebraReport f3 = analyze_algebra(free_two_step(3));
  EXPECT_EQ(f3.dim, 6);
  EXPECT_EQ(f3.commutator_dim, 3);
  EXPECT_EQ(f3.center_dim, 3);
  EXPECT_EQ(f3.step, 2);
  const LieAlgebra f4 = free_two_step(4);
  EXPECT_EQ(f4.dim(), 10);
  EXPECT_EQ(commutator_ideal(f4).dim(), 6);
  EXPECT_EQ(commutator_ideal(f4), center(f4));
  EXPECT_THROW(free_two_step(1), PreconditionError);
}

TEST(FreeTwoStep, WedgeOrdering) {
  const Index r = 4;
  const LieAlgebra f = free_two_step(r);
  Index expected = r;
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j) {
      EXPECT_EQ(wedge_index(r, i, j), expected);
      EXPECT_EQ(f.bracket(i, j), RVector(unit_vector<Rational>(f.dim(), expected)));
      ++expected;
    }
}

TEST(FreeComplexStructure, Steps) {
  for (Index r = 2; r <= 8; ++r) {
    const auto f = free_complex_structure(r);
    const Index base = r + r * (r - 1) / 2;
    ASSERT_EQ(f.algebra.dim(), base + base % 2) << r;
    EXPECT_TRUE(is_integrable(f.algebra, f.J)) << r;
    EXPECT_EQ(j_nilpotent_step(f.algebra, f.J), r % 4 == 3 ? 3 : 2) << r;
    EXPECT_EQ(commutator_ideal(f.algebra).dim(), r * (r - 1) / 2) << r;
  }
}

TEST(FreeComplexStructure, RankTwoIsAbelian) {
  const auto f = free_complex_structure(2);
  EXPECT_EQ(f.algebra.dim(), 4);
  EXPECT_TRUE(is_abelian_structure(f.algebra, f.J));
}

TEST(StandardAbelianTriple, Shape) {
  for (Index k : {0, 1})
    for (Index m : {1, 2, 3}) {
      const MetricComplexTriple t = standard_abelian_triple(k, m);
      EXPECT_EQ(t.dim(), 2 * k + 1 + 2 * m + 1);
      EXPECT_EQ(t.gram(), eye(t.dim()));
      EXPECT_TRUE(is_abelian_structure(t.algebra(), t.J()));
      EXPECT_EQ(commutator_ideal(t.algebra()).dim(), 1);
      EXPECT_EQ(center(t.algebra()).dim(), 2 * k + 2);
    }
}

TEST(SixDimList, NamesAndBounds) {
  EXPECT_EQ(table1_salamon(1), "(0,0,0,12,13,23)");
  EXPECT_EQ(table1_name(4), "h3+h3");
  EXPECT_THROW(table1_algebra(0), PreconditionError);
  EXPECT_THROW(table1_algebra(8), PreconditionError);
}

TEST(ComplexStructureFromPairs, Basics) {
  const ComplexStructure j = complex_structure_from_pairs({{rv({1, 0}), rv({1, 1})}});
  EXPECT_EQ(j(rv({1, 0})), rv({1, 1}));
  EXPECT_EQ(j(rv({1, 1})), rv({-1, 0}));
  EXPECT_THROW(complex_structure_from_pairs({{rv({1, 0}), rv({2, 0})}}), SemanticError);
  EXPECT_THROW(complex_structure_from_pairs({{rv({1, 0, 0}), rv({0, 1, 0})}}), PreconditionError);
}
