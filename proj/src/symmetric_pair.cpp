#include "nilherm/symmetric_pair.hpp"

namespace nilherm {

namespace {

Subspace unit_span(Index n, Index from, Index count) {
  RMatrix m = RMatrix::Zero(n, count);
  for (Index i = 0; i < count; ++i) m(from + i, i) = 1;
  return Subspace::span(m);
}

RMatrix block_diagonal(const RMatrix& a, const RMatrix& b) {
  RMatrix out = RMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

RMatrix rotation() {
  RMatrix r = RMatrix::Zero(2, 2);
  r(1, 0) = 1;
  r(0, 1) = -1;
  return r;
}

// ad z restricted to m, in the coordinates of the m columns.
std::vector<RMatrix> isotropy_action(const LieAlgebra& g, const Subspace& h, const Subspace& m) {
  std::vector<RMatrix> out;
  for (Index i = 0; i < h.dim(); ++i) {
    const RVector z = h.basis().col(i);
    RMatrix a(m.dim(), m.dim());
    for (Index c = 0; c < m.dim(); ++c) a.col(c) = *m.coordinates(g.bracket(z, RVector(m.basis().col(c))));
    out.push_back(a);
  }
  return out;
}

}  // namespace

RMatrix killing_form(const LieAlgebra& g) {
  const Index n = g.dim();
  std::vector<RMatrix> ad;
  for (Index i = 0; i < n; ++i) ad.push_back(g.ad(unit_vector<Rational>(n, i)));
  RMatrix b(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) b(i, j) = b(j, i) = RMatrix(ad[static_cast<std::size_t>(i)] * ad[static_cast<std::size_t>(j)]).trace();
  return b;
}

LieAlgebra su2xsu2() {
  LieAlgebra l = direct_sum(su2(), su2());
  l.set_name("su(2)+su(2)");
  return l;
}

Subspace su2_diagonal() {
  RMatrix d = RMatrix::Zero(6, 3);
  for (Index i = 0; i < 3; ++i) d(i, i) = d(i + 3, i) = 1;
  return Subspace::span(d);
}

SymmetricPairAlgebra symmetric_pair_nilalgebra(const LieAlgebra& g, const Subspace& h) {
  const Index n = g.dim();
  const RMatrix metric = -killing_form(g);
  if (!is_positive_definite(metric)) throw SemanticError("compact", "Killing form is not negative definite");
  if (h.ambient_dim() != n) throw SemanticError("subalgebra", "h lives in a different space");
  const RMatrix& hb = h.basis();
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = i + 1; j < h.dim(); ++j)
      if (!h.contains(g.bracket(RVector(hb.col(i)), RVector(hb.col(j)))))
        throw SemanticError("subalgebra", "h is not closed under the bracket");
  const Subspace m = orthogonal_complement(h, metric);
  const RMatrix& mb = m.basis();
  for (Index i = 0; i < h.dim(); ++i)
    for (Index c = 0; c < m.dim(); ++c)
      if (!m.contains(g.bracket(RVector(hb.col(i)), RVector(mb.col(c)))))
        throw SemanticError("[h,m]⊆m", "[h, m] is not contained in m");
  for (Index a = 0; a < m.dim(); ++a)
    for (Index c = a + 1; c < m.dim(); ++c)
      if (!h.contains(g.bracket(RVector(mb.col(a)), RVector(mb.col(c)))))
        throw SemanticError("[m,m]⊆h", "[m, m] is not contained in h");

  const Index dh = h.dim(), dm = m.dim();
  RMatrix p(n, n);
  p << hb, mb;
  const RMatrix p_inv = inverse(p);
  std::vector<BracketEntry> entries;
  for (Index a = 0; a < dm; ++a)
    for (Index c = a + 1; c < dm; ++c) {
      const RVector w = p_inv * g.bracket(RVector(mb.col(a)), RVector(mb.col(c)));
      if (!is_zero_matrix(w)) entries.push_back({dh + a, dh + c, w});
    }
  SymmetricPairAlgebra out{g, dh, p, MetricLieAlgebra{LieAlgebra(n, entries, "n(g,h)"), RMatrix(p.transpose() * metric * p)},
                           false};
  if (dh > 0 && dm > 0) {
    const auto pi = isotropy_action(g, h, m);
    const RMatrix gram_m = out.n.gram.bottomRightCorner(dm, dm);
    out.irreducible = is_irreducible(pi, gram_m);
    if (out.irreducible) {
      const Subspace hz = unit_span(n, 0, dh);
      if (center(out.n.algebra) != hz) throw SemanticError("postcondition", "center differs from h");
      RMatrix v_basis = RMatrix::Zero(n, dm);
      v_basis.bottomRows(dm) = RMatrix::Identity(dm, dm);
      const JMapPackage pkg = j_map(out.n.algebra, out.n.gram, hz, v_basis);
      for (Index i = 0; i < dh; ++i)
        if (pkg.j[static_cast<std::size_t>(i)] != pi[static_cast<std::size_t>(i)])
          throw SemanticError("postcondition", "j(z) differs from ad z on m");
    }
  }
  return out;
}

MetricComplexTriple hermitian_symmetric_J(const SymmetricPairAlgebra& pair, const RMatrix& j_m, const RMatrix& j1,
                                          std::optional<Rational> padding_norm) {
  const LieAlgebra& n = pair.n.algebra;
  const Index dh = pair.dim_h, dm = n.dim() - dh, s = dh % 2;
  const RMatrix gram_h = pair.n.gram.topLeftCorner(dh, dh);
  const RMatrix gram_m = pair.n.gram.bottomRightCorner(dm, dm);
  if (j_m.rows() != dm || j_m.cols() != dm || !is_complex_structure(j_m))
    throw SemanticError("J_m", "J_m must be a square root of -I on m");
  if (RMatrix(j_m.transpose() * gram_m * j_m) != gram_m) throw SemanticError("J_m", "J_m is not orthogonal");
  const Subspace h = Subspace::span(RMatrix(pair.basis.leftCols(dh)));
  const Subspace m = Subspace::span(RMatrix(pair.basis.rightCols(dm)));
  for (const auto& a : isotropy_action(pair.g, h, m))
    if (RMatrix(a * j_m) != RMatrix(j_m * a)) throw SemanticError("J_m", "J_m does not commute with ad h");
  auto lift = [&](const RVector& x) {
    RVector v = RVector::Zero(n.dim());
    v.tail(dm) = x;
    return v;
  };
  for (Index a = 0; a < dm; ++a)
    for (Index c = a + 1; c < dm; ++c) {
      const RVector x = lift(unit_vector<Rational>(dm, a)), y = lift(unit_vector<Rational>(dm, c));
      if (n.bracket(lift(RVector(j_m.col(a))), lift(RVector(j_m.col(c)))) != n.bracket(x, y))
        throw SemanticError("Hermit-symm", "[J x, J y] differs from [x, y] on m");
    }
  const Rational norm = padding_norm ? *padding_norm : (dh > 0 ? gram_h(0, 0) : Rational(1));
  const RMatrix gram_z = block_diagonal(RMatrix(norm * RMatrix::Identity(s, s)), gram_h);
  if (j1.rows() != s + dh || j1.cols() != s + dh || !is_complex_structure(j1) ||
      RMatrix(j1.transpose() * gram_z * j1) != gram_z)
    throw SemanticError("J1", "J1 must be an orthogonal square root of -I on R^s + h");

  LieAlgebra l = s > 0 ? direct_sum(LieAlgebra(s, {}), n) : n;
  l.set_name(s > 0 ? "R+n(g,h)" : "n(g,h)");
  MetricComplexTriple t(std::move(l), ComplexStructure(block_diagonal(j1, j_m)), block_diagonal(gram_z, gram_m));
  if (!is_abelian_structure(t.algebra(), t.J())) throw SemanticError("postcondition", "J is not abelian");
  if (!is_pluriclosed(t)) throw SemanticError("postcondition", "the metric is not pluriclosed");
  return t;
}

MetricComplexTriple su2_u1_hermitian_triple() {
  RMatrix x1 = RMatrix::Zero(3, 1);
  x1(0, 0) = 1;
  const auto pair = symmetric_pair_nilalgebra(su2(), Subspace::span(x1));
  return hermitian_symmetric_J(pair, rotation(), rotation());
}

}  // namespace nilherm
