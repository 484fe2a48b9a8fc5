#include <gtest/gtest.h>

#include "nilherm/basic_constructors.hpp"
#include "nilherm/random.hpp"
#include "nilherm/replication.hpp"
#include "nilherm/salamon.hpp"
#include "nilherm/three_step_data.hpp"
#include "nilherm/two_step_data.hpp"
#include "test_util.hpp"

using namespace nilherm;
using namespace nilherm::testing;

namespace {

// R ⊕ h3 in the order e1, e2, z = [e1, e2], w.
LieAlgebra h3_plus_r() { return parse_salamon("(0,0,12,0)"); }

ComplexStructure pairs_j(Index n, const std::vector<std::pair<Index, Index>>& pairs) {
  std::vector<std::pair<RVector, RVector>> ps;
  for (auto [a, b] : pairs) ps.push_back({unit_vector<Rational>(n, a), unit_vector<Rational>(n, b)});
  return complex_structure_from_pairs(ps);
}

}  // namespace

TEST(ComplexStructure, RejectsNonSquareRoots) {
  EXPECT_THROW(ComplexStructure(eye(2)), SemanticError);
  EXPECT_THROW(ComplexStructure(RMatrix(3, 3)), SemanticError);
  EXPECT_NO_THROW(ComplexStructure(standard_j(2)));
  EXPECT_TRUE(is_complex_structure(standard_j(3)));
}

TEST(Nijenhuis, AbelianStructureVanishes) {
  const LieAlgebra l = h3_plus_r();
  const ComplexStructure j = pairs_j(4, {{0, 1}, {2, 3}});
  ASSERT_TRUE(is_abelian_structure(l, j));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b)
      EXPECT_TRUE(is_zero_matrix(nijenhuis(l, j, unit_vector<Rational>(4, a), unit_vector<Rational>(4, b))));
  EXPECT_TRUE(is_integrable(l, j));
}

TEST(Nijenhuis, FreeFourIsIntegrable) {
  const auto f = free_complex_structure(4);
  EXPECT_EQ(f.algebra.dim(), 10);
  EXPECT_FALSE(nijenhuis_witness(f.algebra, f.J));
  EXPECT_TRUE(is_integrable(f.algebra, f.J));
}

TEST(Nijenhuis, MismatchedCenterChoice) {
  // J e1 = z, J e2 = w on R ⊕ h3: N(e1, e2) = [e1, e2] = z.
  const LieAlgebra l = h3_plus_r();
  const ComplexStructure j = pairs_j(4, {{0, 2}, {1, 3}});
  EXPECT_EQ(nijenhuis(l, j, unit_vector<Rational>(4, 0), unit_vector<Rational>(4, 1)), rv({0, 0, 1, 0}));
  const auto w = nijenhuis_witness(l, j);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->i, 0);
  EXPECT_EQ(w->j, 1);
  EXPECT_FALSE(is_integrable(l, j));
}

TEST(Nijenhuis, BilinearAndAntisymmetric) {
  const LieAlgebra l = table1_algebra(2);
  Rng rng(5);
  const ComplexStructure j(standard_j(3));
  for (int k = 0; k < 5; ++k) {
    const RVector x = rng.vector(6, 3), y = rng.vector(6, 3), u = rng.vector(6, 3);
    EXPECT_EQ(nijenhuis(l, j, x, y), RVector(-nijenhuis(l, j, y, x)));
    EXPECT_EQ(nijenhuis(l, j, RVector(x + 2 * u), y), RVector(nijenhuis(l, j, x, y) + 2 * nijenhuis(l, j, u, y)));
  }
}

TEST(JSeries, OneDimensionalCenterStaysZero) {
  const LieAlgebra l = parse_salamon("(0,0,12,13)");
  const ComplexStructure j(standard_j(2));
  const auto series = j_ascending_series(l, j);
  ASSERT_FALSE(series.empty());
  for (const auto& a : series) EXPECT_TRUE(a.is_zero());
  EXPECT_FALSE(j_nilpotent_step(l, j));
  EXPECT_TRUE(is_strongly_non_nilpotent(l, j));
}

TEST(JSeries, FreeThreeTakesThreeSteps) {
  const auto f = free_complex_structure(3);
  const auto series = j_ascending_series(f.algebra, f.J);
  ASSERT_EQ(series.size(), 4u);
  EXPECT_TRUE(series[0].is_zero());
  EXPECT_TRUE(series[3].is_full());
  EXPECT_LT(series[1].dim(), series[2].dim());
  EXPECT_LT(series[2].dim(), 6);
  EXPECT_EQ(j_nilpotent_step(f.algebra, f.J), 3);
}

TEST(JSeries, AbelianAlgebraIsOneStep) {
  const LieAlgebra l = LieAlgebra::abelian(4);
  const ComplexStructure j(standard_j(2));
  const auto series = j_ascending_series(l, j);
  ASSERT_GE(series.size(), 2u);
  EXPECT_TRUE(series[1].is_full());
  EXPECT_EQ(j_nilpotent_step(l, j), 1);
}

TEST(JStep, FreeStructures) {
  const std::vector<std::pair<Index, int>> expected = {{2, 2}, {3, 3}, {4, 2}, {5, 2}, {6, 2}, {7, 3}};
  for (auto [r, step] : expected) {
    const auto f = free_complex_structure(r);
    const Index base = r + r * (r - 1) / 2;
    EXPECT_EQ(f.algebra.dim(), base % 2 == 0 ? base : base + 1) << r;
    EXPECT_TRUE(is_integrable(f.algebra, f.J)) << r;
    EXPECT_EQ(j_nilpotent_step(f.algebra, f.J), step) << r;
  }
}

TEST(AbelianStructures, OneDimensionalCommutator) {
  const LieAlgebra l = h3_plus_r();
  for (const auto& pairs : std::vector<std::vector<std::pair<Index, Index>>>{{{0, 1}, {2, 3}}, {{1, 0}, {3, 2}}}) {
    const ComplexStructure j = pairs_j(4, pairs);
    ASSERT_TRUE(is_integrable(l, j));
    EXPECT_TRUE(is_abelian_structure(l, j));
  }
}

TEST(AbelianStructures, UnitaryExample) {
  const MetricComplexTriple t = build_from_2step_data(example_2step_data(TwoStepExample::Abelian, 2));
  EXPECT_TRUE(is_abelian_structure(t.algebra(), t.J()));
  EXPECT_FALSE(is_biinvariant_structure(t.algebra(), t.J()));
}

TEST(AbelianStructures, AbelianAlgebraBoth) {
  const LieAlgebra l = LieAlgebra::abelian(6);
  const ComplexStructure j(standard_j(3));
  EXPECT_TRUE(is_abelian_structure(l, j));
  EXPECT_TRUE(is_biinvariant_structure(l, j));
}

TEST(AbelianStructures, Witnesses) {
  const auto f = free_complex_structure(3);
  EXPECT_TRUE(abelian_witness(f.algebra, f.J).has_value());
  EXPECT_TRUE(biinvariant_witness(f.algebra, f.J).has_value());
}

TEST(NjPrime, Examples) {
  const auto f = free_complex_structure(3);
  EXPECT_FALSE(j_invariant_commutator(f.algebra, f.J).is_zero());
  const MetricComplexTriple bi = build_from_2step_data(example_2step_data(TwoStepExample::BiInvariant, 2));
  ASSERT_TRUE(is_biinvariant_structure(bi.algebra(), bi.J()));
  EXPECT_EQ(j_invariant_commutator(bi.algebra(), bi.J()), commutator_ideal(bi.algebra()));
  EXPECT_TRUE(j_invariant_commutator(h3_plus_r(), pairs_j(4, {{0, 1}, {2, 3}})).is_zero());
}

TEST(StronglyNonNilpotent, Examples) {
  const MetricComplexTriple t = standard_abelian_triple(0, 2);
  EXPECT_FALSE(is_strongly_non_nilpotent(t.algebra(), t.J()));
  // Filiform (0,0,12,13,14,15): one-dimensional center.
  const LieAlgebra l = parse_salamon("(0,0,12,13,14,15)");
  ASSERT_EQ(center(l).dim(), 1);
  EXPECT_TRUE(is_strongly_non_nilpotent(l, ComplexStructure(standard_j(3))));
  EXPECT_FALSE(is_strongly_non_nilpotent(LieAlgebra::abelian(2), ComplexStructure(standard_j(1))));
}

TEST(CentralFactor, Examples) {
  // R^2 ⊕ (R ⊕ h3), J preserving the R^2 factor.
  const LieAlgebra l = direct_sum(LieAlgebra::abelian(2), h3_plus_r());
  const ComplexStructure j = pairs_j(6, {{0, 1}, {2, 3}, {4, 5}});
  ASSERT_TRUE(is_integrable(l, j));
  EXPECT_TRUE(has_central_complex_abelian_factor(l, j));
  const auto f = free_complex_structure(3);
  EXPECT_FALSE(has_central_complex_abelian_factor(f.algebra, f.J));
  for (const TwoStepType& type : std::vector<TwoStepType>{{1, 1, 0, 0, 2}, {1, 0, 0, 1, 2}, {0, 1, 1, 1, 3}}) {
    const MetricComplexTriple t = build_from_2step_data(random_2step_data(type, 0));
    EXPECT_FALSE(has_central_complex_abelian_factor(t.algebra(), t.J())) << to_string(type);
  }
}

TEST(Classify, FieldsAgree) {
  const auto f = free_complex_structure(3);
  const JClassification c = classify(f.algebra, f.J);
  EXPECT_TRUE(c.integrable);
  EXPECT_FALSE(c.abelian);
  EXPECT_FALSE(c.biinvariant);
  EXPECT_EQ(c.j_nilpotent_step, 3);
  EXPECT_FALSE(c.center_invariant);
  EXPECT_FALSE(c.commutator_in_center);
  EXPECT_GT(c.nj_dim, 0);
}

// Structural properties over every integrable structure in the shared pool.
TEST(Properties, IntegrableTwoStepStructures) {
  int step2 = 0, step3 = 0;
  for (const auto& [name, t] : triple_pool()) {
    const LieAlgebra& l = t.algebra();
    const ComplexStructure& j = t.J();
    if (!is_integrable(l, j) || !is_two_step(l)) continue;
    const auto step = j_nilpotent_step(l, j);
    ASSERT_TRUE(step == 2 || step == 3) << name;
    const Subspace np = commutator_ideal(l), z = center(l);
    const Subspace zj = intersection(z, j.apply(z));
    const bool two = *step == 2;
    EXPECT_EQ(two, zj.contains(np)) << name;
    EXPECT_EQ(two, z.contains(j.apply(np))) << name;
    if (is_abelian_structure(l, j) || is_biinvariant_structure(l, j)) {
      EXPECT_TRUE(two) << name;
    }
    if (!two) {
      EXPECT_FALSE(z.contains(j.apply(z))) << name;
      EXPECT_GE(np.dim(), 3) << name;
      EXPECT_FALSE(j_invariant_commutator(l, j).is_zero()) << name;
      ++step3;
    } else {
      ++step2;
    }
    if (np == z && z.dim() % 2 == 1) {
      EXPECT_FALSE(two) << name;
    }
    EXPECT_FALSE(is_strongly_non_nilpotent(l, j)) << name;
  }
  EXPECT_GT(step2, 20);
  EXPECT_GT(step3, 2);
}

TEST(Properties, SeriesTermsAreInvariantIdeals) {
  for (const auto& [name, t] : triple_pool()) {
    const LieAlgebra& l = t.algebra();
    const ComplexStructure& j = t.J();
    const auto a = j_ascending_series(l, j);
    const auto g = ascending_central_series(l);
    EXPECT_EQ(a[1], intersection(center(l), j.apply(center(l)))) << name;
    for (std::size_t s = 0; s < a.size(); ++s) {
      EXPECT_TRUE(j.preserves(a[s])) << name;
      for (Index k = 0; k < l.dim(); ++k) EXPECT_TRUE(a[s].contains(image(l.right_multiplication(k), a[s]))) << name;
      EXPECT_TRUE(g[std::min(s, g.size() - 1)].contains(a[s])) << name;
      if (s > 0 && s + 1 < a.size()) {
        EXPECT_LT(a[s - 1].dim(), a[s].dim()) << name;
      }
    }
  }
}

TEST(Properties, OddCenterForcesThreeSteps) {
  for (Index r : {3, 7}) {
    const auto f = free_complex_structure(r);
    ASSERT_EQ(commutator_ideal(f.algebra), center(f.algebra));
    EXPECT_EQ(j_nilpotent_step(f.algebra, f.J), 3);
  }
  for (Index n : {3, 5}) {
    const MetricComplexTriple t = build_from_3step_data(example_3step_data(n));
    const Subspace np = commutator_ideal(t.algebra());
    if (np == center(t.algebra()) && np.dim() % 2 == 1) {
      EXPECT_EQ(j_nilpotent_step(t.algebra(), t.J()), 3);
    }
  }
}
