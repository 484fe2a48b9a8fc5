#include <gtest/gtest.h>

#include "nilherm/basic_constructors.hpp"
#include "nilherm/hypercomplex.hpp"
#include "nilherm/random.hpp"
#include "nilherm/replication.hpp"
#include "nilherm/representations.hpp"
#include "nilherm/symmetric_pair.hpp"
#include "nilherm/two_step_data.hpp"
#include "test_util.hpp"

using namespace nilherm;
using namespace nilherm::testing;

namespace {

// Basis w, x1, y1, z with [x1, y1] = z, J x1 = y1, J z = w.
MetricComplexTriple r_h3() { return standard_abelian_triple(0, 1); }

RVector e(Index n, Index k) { return unit_vector<Rational>(n, k); }

bool commutes(const RMatrix& a, const RMatrix& b) { return RMatrix(a * b) == RMatrix(b * a); }
bool anticommutes(const RMatrix& a, const RMatrix& b) { return is_zero_matrix(RMatrix(a * b + b * a)); }

// vec of a matrix as a column.
RVector vec(const RMatrix& m) {
  RVector v(m.size());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

// {z in q : f(j(z)) = 0} for a linear f on End(v).
template <typename F>
Subspace kernel_on(const Subspace& q, F f) {
  if (q.dim() == 0) return q;
  RMatrix m;
  for (Index c = 0; c < q.dim(); ++c) {
    const RVector col = vec(f(RVector(q.basis().col(c))));
    if (c == 0) m.resize(col.size(), q.dim());
    m.col(c) = col;
  }
  return Subspace::span(RMatrix(q.basis() * kernel(m).basis()));
}

RMatrix s_at(const JMapPackage& pkg, const ComplexStructure& j, const RMatrix& jv, const RVector& z) {
  return pkg.at(j(z)) - jv * pkg.at(z);
}

std::vector<const NamedTriple*> step_two_pool() {
  std::vector<const NamedTriple*> out;
  for (const auto& nt : triple_pool())
    if (is_two_step(nt.triple.algebra()) && is_integrable(nt.triple.algebra(), nt.triple.J()) &&
        j_nilpotent_step(nt.triple.algebra(), nt.triple.J()) == 2)
      out.push_back(&nt);
  return out;
}

Subspace z0_of(const LieAlgebra& l, const ComplexStructure& j) {
  const Subspace np = commutator_ideal(l);
  return sum(np, j.apply(np));
}

}  // namespace

TEST(MetricComplexTriple, Validation) {
  const LieAlgebra l = LieAlgebra::abelian(2);
  const ComplexStructure j(standard_j(1));
  EXPECT_NO_THROW(MetricComplexTriple(l, j, eye(2)));
  EXPECT_THROW(MetricComplexTriple(l, j, RMatrix(rm({{2, 0}, {0, 1}}))), SemanticError);
  EXPECT_THROW(MetricComplexTriple(l, j, RMatrix(rm({{1, 2}, {2, 1}}))), SemanticError);
  EXPECT_TRUE(is_hermitian(j, hermitian_average(j, RMatrix(rm({{2, 1}, {1, 3}})))));
}

TEST(JMap, RPlusHeisenberg) {
  const MetricComplexTriple t = r_h3();
  const Subspace z0 = Subspace::span(RMatrix((RMatrix(4, 2) << e(4, 0), e(4, 3)).finished()));
  const JMapPackage pkg = j_map(t, z0);
  EXPECT_EQ(pkg.v, Subspace::span(RMatrix((RMatrix(4, 2) << e(4, 1), e(4, 2)).finished())));
  const RMatrix jv = restrict_to_v(pkg, t.J());
  EXPECT_EQ(pkg.at(e(4, 3)), jv);
  EXPECT_TRUE(is_zero_matrix(pkg.at(e(4, 0))));
  EXPECT_EQ(pkg.kernel_of_j, Subspace::span(e(4, 0)));
}

TEST(JMap, AbelianAlgebraIsZero) {
  const LieAlgebra l = LieAlgebra::abelian(4);
  const Subspace z0 = Subspace::span(e(4, 3));
  const JMapPackage pkg = j_map(l, eye(4), z0);
  for (const auto& m : pkg.j) EXPECT_TRUE(is_zero_matrix(m));
}

TEST(JMap, FreeThree) {
  const LieAlgebra f3 = free_two_step(3);
  const JMapPackage pkg = j_map(f3, eye(6), center(f3));
  const RMatrix j12 = pkg.at(e(6, wedge_index(3, 0, 1)));
  EXPECT_EQ(pkg.to_v(e(6, 0)), e(3, 0));
  EXPECT_EQ(RVector(j12 * e(3, 0)), e(3, 1));
  EXPECT_EQ(RVector(j12 * e(3, 1)), RVector(-e(3, 0)));
  EXPECT_TRUE(is_zero_matrix(RVector(j12 * e(3, 2))));
}

TEST(JMap, SandwichViolation) {
  const MetricComplexTriple t = r_h3();
  EXPECT_THROW(j_map(t, Subspace::span(e(4, 0))), PreconditionError);
  EXPECT_THROW(j_map(t, Subspace::span(RMatrix((RMatrix(4, 2) << e(4, 1), e(4, 3)).finished()))), PreconditionError);
}

TEST(JMap, Properties) {
  for (const auto* nt : step_two_pool()) {
    const auto& t = nt->triple;
    const Subspace z = center(t.algebra());
    const JMapPackage pkg = j_map(t, z0_of(t.algebra(), t.J()));
    Subspace common = pkg.v;
    for (Index c = 0; c < pkg.z0.dim(); ++c) {
      const RMatrix jz = pkg.j[static_cast<std::size_t>(c)];
      EXPECT_TRUE(is_skew(RMatrix(pkg.v_gram * jz))) << nt->name;
      for (Index a = 0; a < pkg.v_basis.cols(); ++a)
        for (Index b = 0; b < pkg.v_basis.cols(); ++b) {
          const Rational lhs = (e(pkg.v_basis.cols(), a).transpose() * jz.transpose() * pkg.v_gram *
                                e(pkg.v_basis.cols(), b))(0, 0);
          const RVector br = t.algebra().bracket(RVector(pkg.v_basis.col(a)), RVector(pkg.v_basis.col(b)));
          EXPECT_EQ(lhs, t.inner(RVector(pkg.z0.basis().col(c)), br)) << nt->name;
        }
      common = intersection(common, image(pkg.v_basis, kernel(jz)));
    }
    EXPECT_EQ(sum(pkg.z0, common), z) << nt->name;
    EXPECT_EQ(pkg.kernel_of_j, intersection(pkg.z0, orthogonal_complement(commutator_ideal(t.algebra()), t.gram())));
  }
}

TEST(SMap, RPlusHeisenberg) {
  const MetricComplexTriple t = r_h3();
  const JMapPackage pkg = j_map(t, center(t.algebra()));
  const auto s = s_map(pkg, t.J());
  const RMatrix jv = restrict_to_v(pkg, t.J());
  EXPECT_EQ(s_at(pkg, t.J(), jv, e(4, 3)), eye(2));
  EXPECT_TRUE(integrability_via_S(t));
}

TEST(SMap, VanishingCases) {
  const MetricComplexTriple bi = build_from_2step_data(example_2step_data(TwoStepExample::BiInvariant, 2));
  const JMapPackage pkg = j_map(bi, commutator_ideal(bi.algebra()));
  for (const auto& s : s_map(pkg, bi.J())) EXPECT_TRUE(is_zero_matrix(s));
  const LieAlgebra a = LieAlgebra::abelian(4);
  const ComplexStructure j(standard_j(2));
  const Subspace z0 = Subspace::span(RMatrix((RMatrix(4, 2) << e(4, 2), e(4, 3)).finished()));
  for (const auto& s : s_map(j_map(a, eye(4), z0), j)) EXPECT_TRUE(is_zero_matrix(s));
}

TEST(SMap, RequiresInvariantZ0) {
  const MetricComplexTriple t = standard_abelian_triple(1, 1);
  const Subspace z = center(t.algebra());
  const Subspace z0 = sum(commutator_ideal(t.algebra()), Subspace::span(e(t.dim(), 1)));
  ASSERT_TRUE(z.contains(z0));
  EXPECT_THROW(s_map(j_map(t, z0), t.J()), PreconditionError);
}

TEST(SMap, Properties) {
  for (const auto* nt : step_two_pool()) {
    const auto& t = nt->triple;
    const JMapPackage pkg = j_map(t, z0_of(t.algebra(), t.J()));
    const RMatrix jv = restrict_to_v(pkg, t.J());
    for (Index c = 0; c < pkg.z0.dim(); ++c) {
      const RVector z = pkg.z0.basis().col(c);
      EXPECT_EQ(s_at(pkg, t.J(), jv, t.J()(z)), RMatrix(-jv * s_at(pkg, t.J(), jv, z))) << nt->name;
    }
    const Subspace ker_s = kernel_on(pkg.z0, [&](const RVector& z) { return s_at(pkg, t.J(), jv, z); });
    EXPECT_TRUE(t.J().preserves(ker_s)) << nt->name;
  }
}

TEST(PlusMinus, Examples) {
  const RMatrix jv = standard_j(2);
  auto [p, m] = plus_minus_parts(jv, jv);
  EXPECT_EQ(p, jv);
  EXPECT_TRUE(is_zero_matrix(m));
  const RMatrix sigma = RMatrix(rv({1, -1, 1, -1}).asDiagonal());
  std::tie(p, m) = plus_minus_parts(sigma, jv);
  EXPECT_TRUE(is_zero_matrix(p));
  EXPECT_EQ(m, sigma);
}

TEST(PlusMinus, BlockFormula) {
  // Adapted basis [v0 | J v0] with J = [[0, -I], [I, 0]].
  const Index n = 2;
  RMatrix jv = RMatrix::Zero(2 * n, 2 * n);
  jv.block(0, n, n, n) = -eye(n);
  jv.block(n, 0, n, n) = eye(n);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const RMatrix t = rng.matrix(2 * n, 2 * n, 5);
    const RMatrix t1 = t.block(0, 0, n, n), t2 = t.block(0, n, n, n), t3 = t.block(n, 0, n, n),
                  t4 = t.block(n, n, n, n);
    RMatrix plus(2 * n, 2 * n), minus(2 * n, 2 * n);
    plus << t1 + t4, t2 - t3, t3 - t2, t1 + t4;
    minus << t1 - t4, t2 + t3, t2 + t3, t4 - t1;
    plus /= 2;
    minus /= 2;
    const auto [p, m] = plus_minus_parts(t, jv);
    EXPECT_EQ(p, plus);
    EXPECT_EQ(m, minus);
  }
}

TEST(PlusMinus, Properties) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed + 50);
    const Index n = 3;
    const RMatrix p = rng.invertible(2 * n, 1);
    const RMatrix jv = p * standard_j(n) * inverse(p);
    const RMatrix t = rng.matrix(2 * n, 2 * n, 4);
    const auto [tp, tm] = plus_minus_parts(t, jv);
    EXPECT_EQ(RMatrix(tp + tm), t);
    EXPECT_TRUE(commutes(tp, jv));
    EXPECT_TRUE(anticommutes(tm, jv));
    const auto [jp, jm] = plus_minus_parts(RMatrix(jv * t), jv);
    EXPECT_EQ(jp, RMatrix(jv * tp));
    EXPECT_EQ(jm, RMatrix(jv * tm));
    const RMatrix sk = rng.skew(2 * n, 4);
    const auto [sp, sm] = plus_minus_parts(sk, standard_j(n));
    EXPECT_TRUE(is_skew(sp));
    EXPECT_TRUE(is_skew(sm));
  }
  EXPECT_THROW(plus_minus_parts(eye(2), eye(2)), PreconditionError);
}

TEST(IntegrabilityViaS, BuiltDataIsIntegrable) {
  for (const TwoStepType& type : std::vector<TwoStepType>{{0, 1, 0, 0, 2}, {1, 1, 0, 0, 2}, {0, 1, 1, 1, 3}}) {
    const MetricComplexTriple t = build_from_2step_data(random_2step_data(type, 3));
    EXPECT_TRUE(integrability_via_S(t)) << to_string(type);
  }
}

TEST(IntegrabilityViaS, PerturbedPsi) {
  Complex2StepData d = example_2step_data(TwoStepExample::Mixed, 2);
  Rng rng(9);
  d.psi_z1.empty() ? d.psi_b.back() += rng.skew(4, 2) : d.psi_z1.back() += rng.skew(4, 2);
  const MetricComplexTriple t = assemble_2step_unchecked(d);
  ASSERT_TRUE(classify(t.algebra(), t.J()).commutator_in_center);
  EXPECT_FALSE(integrability_via_S(t));
  EXPECT_FALSE(is_integrable(t.algebra(), t.J()));
}

// Randomized almost complex structures with J n' ⊆ z: the S test and the Nijenhuis test agree.
TEST(IntegrabilityViaS, AgreesWithNijenhuis) {
  int yes = 0, no = 0;
  for (const auto& [type, seed] : round_trip_cases()) {
    Complex2StepData d = random_2step_data(type, seed);
    Rng rng(seed * 13 + 5);
    if (seed % 2 == 0 || type[0] > 0) {
      auto& target = !d.psi_b.empty() ? d.psi_b.front() : d.psi_z1.front();
      target += rng.skew(target.rows(), 2);
    }
    const MetricComplexTriple t = assemble_2step_unchecked(d);
    if (!classify(t.algebra(), t.J()).commutator_in_center) continue;
    const bool nij = is_integrable(t.algebra(), t.J());
    EXPECT_EQ(integrability_via_S(t), nij);
    (nij ? yes : no)++;
  }
  EXPECT_GT(yes, 3);
  EXPECT_GT(no, 3);
}

// j(z) in u(n) on z1 together with either form of the b-condition is integrability.
TEST(IntegrabilityViaS, UnitaryConditionsAgree) {
  int yes = 0, no = 0;
  for (const auto& [type, seed] : round_trip_cases()) {
    for (int variant = 0; variant < 3; ++variant) {
      Complex2StepData d = random_2step_data(type, seed);
      Rng rng(seed * 7 + static_cast<std::uint64_t>(variant));
      if (variant == 1 && !d.psi_z1.empty()) d.psi_z1.front() += rng.skew(d.psi_z1.front().rows(), 1);
      if (variant == 2 && !d.psi_b.empty()) d.psi_b.front() += rng.skew(d.psi_b.front().rows(), 1);
      const MetricComplexTriple t = assemble_2step_unchecked(d);
      const auto lay = layout_of(d);
      const LieAlgebra& l = t.algebra();
      const Index n = t.dim();
      RMatrix np_cols(n, lay.r + 2 * lay.k);
      for (Index c = 0; c < lay.r + 2 * lay.k; ++c) np_cols.col(c) = e(n, lay.z1() + c);
      if (commutator_ideal(l) != Subspace::span(np_cols)) continue;
      const JMapPackage pkg = j_map(t, z0_of(l, t.J()));
      const RMatrix jv = restrict_to_v(pkg, t.J());
      bool z1_unitary = true, ii = true, iii = true;
      for (Index c = 0; c < lay.r; ++c) z1_unitary = z1_unitary && commutes(pkg.at(e(n, lay.z1() + c)), jv);
      for (Index c = 0; c < lay.k; ++c) {
        const RVector z = e(n, lay.b() + c);
        const RMatrix jz = pkg.at(z), jjz = pkg.at(t.J()(z));
        const RMatrix half_comm = RMatrix(jv * jz - jz * jv) / 2;
        ii = ii && commutes(RMatrix(jjz - half_comm), jv);
        iii = iii && plus_minus_parts(jjz, jv).second == half_comm;
      }
      const bool nij = is_integrable(l, t.J());
      EXPECT_EQ(z1_unitary && ii, nij) << to_string(type) << " " << variant;
      EXPECT_EQ(z1_unitary && iii, nij) << to_string(type) << " " << variant;
      (nij ? yes : no)++;
    }
  }
  EXPECT_GT(yes, 10);
  EXPECT_GT(no, 5);
}

TEST(AbelianCharacterizations, ViaJMap) {
  for (const auto* nt : step_two_pool()) {
    const auto& t = nt->triple;
    const LieAlgebra& l = t.algebra();
    const ComplexStructure& j = t.J();
    const Subspace z = center(l), np = commutator_ideal(l);
    if (j.preserves(z)) {
      const JMapPackage pkg = j_map(t, z);
      const RMatrix jv = restrict_to_v(pkg, j);
      bool all = true;
      for (const auto& m : pkg.j) all = all && commutes(m, jv);
      EXPECT_EQ(is_abelian_structure(l, j), all) << nt->name;
    } else {
      EXPECT_FALSE(is_abelian_structure(l, j)) << nt->name;
    }
    if (j.preserves(np)) {
      const JMapPackage pkg = j_map(t, np);
      const RMatrix jv = restrict_to_v(pkg, j);
      bool all = true;
      for (const auto& m : pkg.j) all = all && anticommutes(m, jv);
      EXPECT_EQ(is_biinvariant_structure(l, j), all) << nt->name;
    } else {
      EXPECT_FALSE(is_biinvariant_structure(l, j)) << nt->name;
    }
  }
}

TEST(AbelianCharacterizations, PlusMinusSubspaces) {
  int abelian = 0, bi = 0;
  for (const auto* nt : step_two_pool()) {
    const auto& t = nt->triple;
    const LieAlgebra& l = t.algebra();
    const ComplexStructure& j = t.J();
    const Subspace z0 = z0_of(l, j);
    const JMapPackage pkg = j_map(t, z0);
    const RMatrix jv = restrict_to_v(pkg, j);
    auto plus = [&](const Subspace& q) {
      return kernel_on(q, [&](const RVector& z) { return plus_minus_parts(pkg.at(z), jv).second; });
    };
    auto minus = [&](const Subspace& q) {
      return kernel_on(q, [&](const RVector& z) { return plus_minus_parts(pkg.at(z), jv).first; });
    };
    const Subspace nj = j_invariant_commutator(l, j);
    for (const Subspace& q : {z0, nj}) {
      const Subspace qp = plus(q), qm = minus(q);
      const Subspace ker_s = kernel_on(q, [&](const RVector& z) { return s_at(pkg, j, jv, z); });
      EXPECT_TRUE(j.preserves(qp)) << nt->name;
      EXPECT_TRUE(qm.contains(ker_s)) << nt->name;
      EXPECT_EQ(ker_s, intersection(qm, j.apply(qm))) << nt->name;
    }
    const bool ab = j.preserves(center(l)) && plus(nj) == nj;
    EXPECT_EQ(is_abelian_structure(l, j), ab) << nt->name;
    const bool s_zero = kernel_on(z0, [&](const RVector& z) { return s_at(pkg, j, jv, z); }) == z0;
    EXPECT_EQ(is_biinvariant_structure(l, j), minus(nj) == commutator_ideal(l)) << nt->name;
    EXPECT_EQ(is_biinvariant_structure(l, j), s_zero) << nt->name;
    abelian += is_abelian_structure(l, j);
    bi += is_biinvariant_structure(l, j);
  }
  EXPECT_GT(abelian, 5);
  EXPECT_GT(bi, 0);
}

TEST(Torsion, RPlusHeisenberg) {
  const ThreeForm c = torsion_three_form(r_h3());
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.at({1, 2, 3}), Rational(-1));
}

TEST(Torsion, AbelianAndProduct) {
  const MetricComplexTriple a(LieAlgebra::abelian(4), ComplexStructure(standard_j(2)), eye(4));
  EXPECT_TRUE(torsion_three_form(a).is_zero());
  // (R ⊕ h3) ⊕ (R ⊕ h3) with the product structure and metric.
  const MetricComplexTriple one = r_h3();
  RMatrix j = RMatrix::Zero(8, 8);
  j.block(0, 0, 4, 4) = one.J().matrix();
  j.block(4, 4, 4, 4) = one.J().matrix();
  const MetricComplexTriple two(direct_sum(one.algebra(), one.algebra()), ComplexStructure(j), eye(8));
  const ThreeForm c = torsion_three_form(two);
  ASSERT_EQ(c.entries.size(), 2u);
  EXPECT_EQ(c.at({1, 2, 3}), Rational(-1));
  EXPECT_EQ(c.at({5, 6, 7}), Rational(-1));
  EXPECT_TRUE(is_pluriclosed(two));
}

TEST(Dc, Examples) {
  EXPECT_TRUE(dc_four_form(r_h3()).is_zero());
  EXPECT_TRUE(is_pluriclosed(r_h3()));
  const MetricComplexTriple h5 = standard_abelian_triple(0, 2);
  EXPECT_FALSE(dc_four_form(h5).is_zero());
  EXPECT_FALSE(is_pluriclosed(h5));
  const MetricComplexTriple a(LieAlgebra::abelian(6), ComplexStructure(standard_j(3)), eye(6));
  EXPECT_TRUE(dc_four_form(a).is_zero());
}

TEST(Dc, MatchesChevalleyEilenbergOnPool) {
  for (const auto& [name, t] : triple_pool()) {
    const ThreeForm c = torsion_three_form(t);
    EXPECT_EQ(dc_four_form(t), chevalley_eilenberg_d(t.algebra(), c)) << name;
  }
}

TEST(PluriclosedCriteria, TwoStepExamples) {
  EXPECT_TRUE(pluriclosed_criterion_2step(r_h3()));
  EXPECT_FALSE(pluriclosed_criterion_2step(standard_abelian_triple(0, 2)));
  EXPECT_TRUE(pluriclosed_criterion_2step(su2_u1_hermitian_triple()));
  const auto f = free_complex_structure(3);
  const MetricComplexTriple t3(f.algebra, f.J, hermitian_average(f.J, eye(6)));
  EXPECT_THROW(pluriclosed_criterion_2step(t3), PreconditionError);
}

TEST(PluriclosedCriteria, AbelianExamples) {
  EXPECT_TRUE(pluriclosed_criterion_abelian(r_h3()));
  for (Index k : {0, 1})
    for (Index m : {2, 3}) {
      const MetricComplexTriple t = standard_abelian_triple(k, m);
      const auto w = pluriclosed_abelian_violation(t);
      ASSERT_TRUE(w) << k << m;
      // The a_i are central, so v = span(x.., y..): the triple x1, x2, y1.
      const Index x1 = 0, x2 = 1, y1 = m;
      EXPECT_EQ((std::array<Index, 3>{w->a, w->b, w->c}), (std::array<Index, 3>{x1, x2, y1}));
    }
  EXPECT_TRUE(pluriclosed_criterion_abelian(su2_u1_hermitian_triple()));
  const MetricComplexTriple bi = build_from_2step_data(example_2step_data(TwoStepExample::BiInvariant, 2));
  EXPECT_THROW(pluriclosed_criterion_abelian(bi), PreconditionError);
}

TEST(PluriclosedCriteria, EquivalencesOnPool) {
  for (const auto& [name, t] : triple_pool()) {
    const LieAlgebra& l = t.algebra();
    if (!is_two_step(l) || !is_integrable(l, t.J())) continue;
    const bool pc = is_pluriclosed(t);
    const auto step = j_nilpotent_step(l, t.J());
    if (step == 3) {
      EXPECT_FALSE(pc) << name;
      continue;
    }
    EXPECT_EQ(pluriclosed_criterion_2step(t), pc) << name;
    if (is_abelian_structure(l, t.J())) {
      EXPECT_EQ(pluriclosed_criterion_abelian(t), pc) << name;
    }
    if (pc) {
      const auto report = pluriclosed_center_sampling_check(t, 17, 50);
      EXPECT_TRUE(report.passed()) << name;
    }
  }
}

TEST(CenterSampling, RPlusHeisenberg) {
  const MetricComplexTriple t = r_h3();
  const auto report = pluriclosed_center_sampling_check(t, 1);
  EXPECT_TRUE(report.inclusion_holds);
  EXPECT_TRUE(report.sampling_passed);
  EXPECT_EQ(report.samples, 200);
  EXPECT_EQ(report.seed, 1u);
  const RVector y = rv({1, 0, 0, 2});
  EXPECT_TRUE(is_zero_matrix(t.algebra().bracket(y, t.J()(y))));
  EXPECT_EQ(t.algebra().bracket(e(4, 1), t.J()(e(4, 1))), e(4, 3));
}

TEST(Hypercomplex, QuaternionicBlock) {
  const IsotypicBlock block{su2_quaternionic_rep(), 1, eye(4)};
  const auto q = invariant_quaternionic_triple(block);
  const HypercomplexStructure h{ComplexStructure(q[0]), ComplexStructure(q[1]), ComplexStructure(q[2])};
  EXPECT_FALSE(validate_hypercomplex(LieAlgebra::abelian(4), h));
  const HypercomplexStructure bad{h.j1, h.j1, ComplexStructure(RMatrix(h.j1.matrix() * h.j1.matrix() * h.j1.matrix()))};
  const auto v = validate_hypercomplex(LieAlgebra::abelian(4), bad);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->relation, "J1J2=J3");
}

TEST(Hypercomplex, NaturallyReductive) {
  const HypercomplexTriple hc = natred_hypercomplex(su2(), eye(3), {IsotypicBlock{su2_quaternionic_rep(), 1, eye(4)}});
  EXPECT_EQ(hc.algebra.dim(), 8);
  EXPECT_FALSE(validate_hypercomplex(hc.algebra, hc.structure));
  EXPECT_TRUE(is_abelian_hypercomplex(hc.algebra, hc.structure));
  EXPECT_TRUE(is_hyper_hermitian(hc.structure, hc.gram));
  EXPECT_TRUE(is_hkt(hc.algebra, hc.structure, hc.gram));
}

TEST(Hkt, AbelianAndPreconditions) {
  const IsotypicBlock block{su2_quaternionic_rep(), 1, eye(4)};
  const auto q = invariant_quaternionic_triple(block);
  const HypercomplexStructure h{ComplexStructure(q[0]), ComplexStructure(q[1]), ComplexStructure(q[2])};
  EXPECT_TRUE(is_hkt(LieAlgebra::abelian(4), h, eye(4)));
  EXPECT_THROW(is_hkt(LieAlgebra::abelian(4), h, RMatrix(rv({1, 2, 1, 2}).asDiagonal())), PreconditionError);
}

TEST(Hkt, AbelianHypercomplexIsHktForHyperHermitianMetrics) {
  const HypercomplexTriple hc = natred_hypercomplex(su2(), eye(3), {IsotypicBlock{su2_quaternionic_rep(), 1, eye(4)}});
  // Average the identity over the quaternion group to get other hyper-Hermitian metrics.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    RMatrix g = rng.positive_definite(8, 2);
    for (int a = 0; a < 3; ++a) g = hermitian_average(hc.structure[a], g);
    ASSERT_TRUE(is_hyper_hermitian(hc.structure, g));
    EXPECT_TRUE(is_hkt(hc.algebra, hc.structure, g));
  }
}
