#include "nilherm/representations.hpp"

namespace nilherm {

namespace {

RVector vec(const RMatrix& t) { return Eigen::Map<const RVector>(t.data(), t.size()); }

RMatrix unvec(const RVector& v, Index n) { return Eigen::Map<const RMatrix>(v.data(), n, n); }

RMatrix adjoint(const RMatrix& t, const RMatrix& g) { return inverse(g) * t.transpose() * g; }

bool is_skew_for(const RMatrix& t, const RMatrix& g) { return is_zero_matrix(RMatrix(t.transpose() * g + g * t)); }

bool is_orthogonal_for(const RMatrix& t, const RMatrix& g) { return RMatrix(t.transpose() * g * t) == g; }

bool commutes_with_all(const RMatrix& t, const std::vector<RMatrix>& pi) {
  for (const auto& p : pi)
    if (RMatrix(t * p) != RMatrix(p * t)) return false;
  return true;
}

RMatrix block_diagonal(const std::vector<RMatrix>& blocks) {
  Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  RMatrix out = RMatrix::Zero(n, n);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

RMatrix repeat_diagonal(const RMatrix& b, Index copies) {
  return block_diagonal(std::vector<RMatrix>(static_cast<std::size_t>(copies), b));
}

// Basis of the span of the given matrices, as matrices.
std::vector<RMatrix> matrix_span_basis(const std::vector<RMatrix>& ms, Index n) {
  if (ms.empty()) return {};
  RMatrix cols(n * n, static_cast<Index>(ms.size()));
  for (std::size_t i = 0; i < ms.size(); ++i) cols.col(static_cast<Index>(i)) = vec(ms[i]);
  const Subspace s = Subspace::span(cols);
  std::vector<RMatrix> out;
  for (Index i = 0; i < s.dim(); ++i) out.push_back(unvec(s.basis().col(i), n));
  return out;
}

// Skew-adjoint parts of the commutant.
std::vector<RMatrix> skew_commutant(const std::vector<RMatrix>& pi, const RMatrix& g) {
  const Index n = g.rows();
  std::vector<RMatrix> parts;
  for (const auto& t : commutant(pi, n)) parts.push_back(RMatrix((t - adjoint(t, g)) / Rational(2)));
  return matrix_span_basis(parts, n);
}

// a / sqrt(c) when a^2 = -c I with c a positive rational square.
std::optional<RMatrix> normalized_unit(const RMatrix& a) {
  const Index n = a.rows();
  if (n == 0 || is_zero_matrix(a)) return std::nullopt;
  const RMatrix sq = a * a;
  const Rational c = -sq(0, 0);
  if (c <= 0 || sq != RMatrix(-c * RMatrix::Identity(n, n))) return std::nullopt;
  Rational root;
  if (!rational_sqrt(c, root)) return std::nullopt;
  return RMatrix(a / root);
}

// Tries the basis elements, then sums and differences of pairs.
std::optional<RMatrix> first_unit(const std::vector<RMatrix>& candidates) {
  for (const auto& a : candidates)
    if (auto u = normalized_unit(a)) return u;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (auto u = normalized_unit(RMatrix(candidates[i] + candidates[j]))) return u;
      if (auto u = normalized_unit(RMatrix(candidates[i] - candidates[j]))) return u;
    }
  return std::nullopt;
}

RMatrix complex_unit(const std::vector<RMatrix>& pi, const RMatrix& g) {
  auto u = first_unit(skew_commutant(pi, g));
  if (!u) throw SemanticError("irrational-normalization", "no skew commutant element with a rational norm was found");
  return *u;
}

std::pair<RMatrix, RMatrix> quaternionic_pair(const std::vector<RMatrix>& pi, const RMatrix& g) {
  const Index n = g.rows();
  const auto skew = skew_commutant(pi, g);
  const RMatrix j1 = complex_unit(pi, g);
  RMatrix anti(n * n, static_cast<Index>(skew.size()));
  for (std::size_t i = 0; i < skew.size(); ++i) anti.col(static_cast<Index>(i)) = vec(RMatrix(j1 * skew[i] + skew[i] * j1));
  const RMatrix coeffs = row_echelon(anti).kernel();
  std::vector<RMatrix> candidates;
  for (Index c = 0; c < coeffs.cols(); ++c) {
    RMatrix m = RMatrix::Zero(n, n);
    for (std::size_t i = 0; i < skew.size(); ++i) m += coeffs(static_cast<Index>(i), c) * skew[i];
    candidates.push_back(m);
  }
  auto j2 = first_unit(candidates);
  if (!j2) throw SemanticError("irrational-normalization", "no anticommuting unit with a rational norm was found");
  return {j1, *j2};
}

Subspace unit_span(Index n, Index from, Index count) {
  RMatrix m = RMatrix::Zero(n, count);
  for (Index i = 0; i < count; ++i) m(from + i, i) = 1;
  return Subspace::span(m);
}

void require_diagonal(const RMatrix& g) {
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (i != j && !is_zero(g(i, j))) throw SemanticError("J_z", "the metric on R^s + h must be diagonal");
}

// Orthogonal J on a diagonal metric pairing e_{2i} with e_{2i+1}.
RMatrix paired_complex(const RMatrix& g) {
  require_diagonal(g);
  const Index n = g.rows();
  if (n % 2 != 0) throw SemanticError("J_z", "R^s + h has odd dimension");
  RMatrix j = RMatrix::Zero(n, n);
  for (Index i = 0; i < n; i += 2) {
    Rational t;
    if (!rational_sqrt(g(i, i) / g(i + 1, i + 1), t))
      throw SemanticError("J_z", "norm ratio of a pair is not a rational square");
    j(i + 1, i) = t;
    j(i, i + 1) = -1 / t;
  }
  return j;
}

// Left multiplication by i, j on quaternion blocks of four equal-norm vectors.
std::pair<RMatrix, RMatrix> quaternion_blocks(const RMatrix& g) {
  require_diagonal(g);
  const Index n = g.rows();
  if (n % 4 != 0) throw SemanticError("J_z", "R^s + h has dimension not divisible by 4");
  const auto left = su2_quaternionic_rep();
  RMatrix a = RMatrix::Zero(n, n), b = RMatrix::Zero(n, n);
  for (Index i = 0; i < n; i += 4) {
    for (Index k = 1; k < 4; ++k)
      if (g(i + k, i + k) != g(i, i)) throw SemanticError("J_z", "quaternion block with unequal norms");
    a.block(i, i, 4, 4) = 2 * left[0];
    b.block(i, i, 4, 4) = 2 * left[1];
  }
  return {a, b};
}

void post(bool ok, const char* what) {
  if (!ok) throw SemanticError("postcondition", what);
}

}  // namespace

void check_representation(const LieAlgebra& h, const std::vector<RMatrix>& pi) {
  const Index dh = h.dim();
  if (static_cast<Index>(pi.size()) != dh) throw SemanticError("representation", "one matrix per basis vector of h is required");
  if (dh == 0) return;
  const Index n = pi[0].rows();
  for (const auto& p : pi)
    if (p.rows() != n || p.cols() != n) throw SemanticError("representation", "matrices of different sizes");
  for (Index i = 0; i < dh; ++i)
    for (Index j = i + 1; j < dh; ++j) {
      const RVector c = h.bracket(i, j);
      RMatrix lhs = RMatrix::Zero(n, n);
      for (Index k = 0; k < dh; ++k) lhs += c(k) * pi[static_cast<std::size_t>(k)];
      const auto &a = pi[static_cast<std::size_t>(i)], &b = pi[static_cast<std::size_t>(j)];
      if (lhs != RMatrix(a * b - b * a))
        throw SemanticError("representation", "pi([x" + std::to_string(i + 1) + ", x" + std::to_string(j + 1) +
                                                  "]) differs from the commutator");
    }
}

std::vector<RMatrix> commutant(const std::vector<RMatrix>& pi, Index n) {
  if (pi.empty()) {
    std::vector<RMatrix> all;
    for (Index k = 0; k < n * n; ++k) all.push_back(unvec(unit_vector<Rational>(n * n, k), n));
    return all;
  }
  const Index nn = n * n;
  RMatrix system(static_cast<Index>(pi.size()) * nn, nn);
  for (Index col = 0; col < nn; ++col) {
    const RMatrix e = unvec(unit_vector<Rational>(nn, col), n);
    for (std::size_t i = 0; i < pi.size(); ++i)
      system.block(static_cast<Index>(i) * nn, col, nn, 1) = vec(RMatrix(e * pi[i] - pi[i] * e));
  }
  const RMatrix k = row_echelon(system).kernel();
  std::vector<RMatrix> out;
  for (Index c = 0; c < k.cols(); ++c) out.push_back(unvec(k.col(c), n));
  return out;
}

std::string to_string(RepType t) {
  switch (t) {
    case RepType::Real: return "real";
    case RepType::Complex: return "complex";
    case RepType::Quaternionic: return "quaternionic";
  }
  return "";
}

bool is_irreducible(const std::vector<RMatrix>& pi, const RMatrix& gram) {
  const Index n = gram.rows();
  if (n == 0) return false;
  if (!is_positive_definite(gram)) throw SemanticError("invariant-metric", "Gram matrix is not positive definite");
  for (const auto& p : pi)
    if (!is_skew_for(p, gram)) throw SemanticError("invariant-metric", "pi(x) is not skew for the metric");
  std::vector<RMatrix> sym{RMatrix::Identity(n, n)};
  for (const auto& t : commutant(pi, n)) sym.push_back(RMatrix((t + adjoint(t, gram)) / Rational(2)));
  return matrix_span_basis(sym, n).size() == 1;
}

RepType irreducible_type(const std::vector<RMatrix>& pi, const RMatrix& gram) {
  if (!is_irreducible(pi, gram)) throw SemanticError("not-irreducible", "the representation has a proper invariant subspace");
  switch (commutant(pi, gram.rows()).size()) {
    case 1: return RepType::Real;
    case 2: return RepType::Complex;
    case 4: return RepType::Quaternionic;
    default: throw SemanticError("not-irreducible", "commutant dimension is not 1, 2 or 4");
  }
}

std::vector<RMatrix> IsotypicBlock::pi() const {
  std::vector<RMatrix> out;
  for (const auto& p : pi_w) out.push_back(repeat_diagonal(p, multiplicity));
  return out;
}

RMatrix IsotypicBlock::gram() const { return repeat_diagonal(gram_w, multiplicity); }

RMatrix invariant_complex_on_isotypic(const IsotypicBlock& b) {
  const RepType type = irreducible_type(b.pi_w, b.gram_w);
  const Index n = b.dim(), r = b.multiplicity;
  RMatrix j;
  if (type == RepType::Real) {
    if (r % 2 != 0)
      throw SemanticError("NoInvariantComplexStructure", "real type block with odd multiplicity " + std::to_string(r));
    const Index half = n / 2;
    j = RMatrix::Zero(n, n);
    j.block(0, half, half, half) = -RMatrix::Identity(half, half);
    j.block(half, 0, half, half) = RMatrix::Identity(half, half);
  } else {
    j = repeat_diagonal(complex_unit(b.pi_w, b.gram_w), r);
  }
  post(commutes_with_all(j, b.pi()) && is_orthogonal_for(j, b.gram()) && is_complex_structure(j),
       "invariant complex structure is not an orthogonal intertwiner with square -I");
  return j;
}

std::array<RMatrix, 3> invariant_quaternionic_triple(const IsotypicBlock& b) {
  const RepType type = irreducible_type(b.pi_w, b.gram_w);
  const Index n = b.dim(), r = b.multiplicity;
  RMatrix j1 = RMatrix::Zero(n, n), j2 = RMatrix::Zero(n, n);
  if (type == RepType::Real) {
    if (r % 4 != 0) throw SemanticError("NoInvariantTriple", "real type block with multiplicity not divisible by 4");
    const Index q = n / 4;
    const RMatrix id = RMatrix::Identity(q, q);
    auto put = [&](RMatrix& m, Index row, Index col, int sign) { m.block(row * q, col * q, q, q) = sign * id; };
    // J1(x, y, z, w) = (-y, x, -w, z), J2(x, y, z, w) = (-z, w, x, -y)
    put(j1, 0, 1, -1);
    put(j1, 1, 0, 1);
    put(j1, 2, 3, -1);
    put(j1, 3, 2, 1);
    put(j2, 0, 2, -1);
    put(j2, 1, 3, 1);
    put(j2, 2, 0, 1);
    put(j2, 3, 1, -1);
  } else if (type == RepType::Complex) {
    if (r % 2 != 0) throw SemanticError("NoInvariantTriple", "complex type block with odd multiplicity");
    const Index half = n / 2;
    const RMatrix j = repeat_diagonal(complex_unit(b.pi_w, b.gram_w), r / 2);
    // J1(u, w) = (Ju, -Jw), J2(u, w) = (-w, u)
    j1.block(0, 0, half, half) = j;
    j1.block(half, half, half, half) = -j;
    j2.block(0, half, half, half) = -RMatrix::Identity(half, half);
    j2.block(half, 0, half, half) = RMatrix::Identity(half, half);
  } else {
    const auto [a, c] = quaternionic_pair(b.pi_w, b.gram_w);
    j1 = repeat_diagonal(a, r);
    j2 = repeat_diagonal(c, r);
  }
  const RMatrix j3 = j1 * j2;
  post(RMatrix(j2 * j1) == RMatrix(-j3), "J1 and J2 do not anticommute");
  const auto pi = b.pi();
  const RMatrix g = b.gram();
  for (const RMatrix* m : std::array<const RMatrix*, 3>{&j1, &j2, &j3})
    post(commutes_with_all(*m, pi) && is_orthogonal_for(*m, g) && is_complex_structure(*m),
         "quaternionic triple member is not an orthogonal intertwiner with square -I");
  return {j1, j2, j3};
}

MetricLieAlgebra naturally_reductive(const LieAlgebra& h, const std::vector<RMatrix>& pi, const RMatrix& gram_h,
                                     const RMatrix& gram_v) {
  const Index dh = h.dim(), dv = gram_v.rows();
  if (dh == 0) throw SemanticError("faithful", "h must be nonzero");
  check_representation(h, pi);
  if (pi[0].rows() != dv || gram_h.rows() != dh) throw SemanticError("representation", "dimension mismatch");
  if (!is_positive_definite(gram_h) || !is_positive_definite(gram_v))
    throw SemanticError("metric", "inner products must be positive definite");
  for (Index i = 0; i < dh; ++i)
    if (!is_skew_for(h.ad(unit_vector<Rational>(dh, i)), gram_h))
      throw SemanticError("ad-invariant", "ad(x" + std::to_string(i + 1) + ") is not skew for the metric on h");
  for (Index i = 0; i < dh; ++i)
    if (!is_skew_for(pi[static_cast<std::size_t>(i)], gram_v))
      throw SemanticError("skew", "pi(x" + std::to_string(i + 1) + ") is not skew for the metric on V");
  RMatrix stacked(dh * dv, dv), vecs(dv * dv, dh);
  for (Index i = 0; i < dh; ++i) {
    stacked.middleRows(i * dv, dv) = pi[static_cast<std::size_t>(i)];
    vecs.col(i) = vec(pi[static_cast<std::size_t>(i)]);
  }
  if (rank(stacked) != dv) throw SemanticError("trivial-subrepresentation", "the pi(x) have a common kernel");
  if (rank(vecs) != dh) throw SemanticError("faithful", "pi has a kernel");

  const Index n = dh + dv;
  const RMatrix gh_inv = inverse(gram_h);
  std::vector<BracketEntry> entries;
  for (Index a = 0; a < dv; ++a)
    for (Index c = a + 1; c < dv; ++c) {
      RVector y(dh);
      for (Index i = 0; i < dh; ++i) y(i) = RMatrix(pi[static_cast<std::size_t>(i)].transpose() * gram_v)(a, c);
      if (is_zero_matrix(y)) continue;
      RVector w = RVector::Zero(n);
      w.head(dh) = gh_inv * y;
      entries.push_back({dh + a, dh + c, w});
    }
  MetricLieAlgebra out{LieAlgebra(n, entries, "N(h,V)"), block_diagonal({gram_h, gram_v})};
  const Subspace hz = unit_span(n, 0, dh);
  post(center(out.algebra) == hz, "center differs from h");
  RMatrix v_basis = RMatrix::Zero(n, dv);
  v_basis.bottomRows(dv) = RMatrix::Identity(dv, dv);
  const JMapPackage pkg = j_map(out.algebra, out.gram, hz, v_basis);
  for (Index i = 0; i < dh; ++i) post(pkg.j[static_cast<std::size_t>(i)] == pi[static_cast<std::size_t>(i)], "j(x) differs from pi(x)");
  return out;
}

NaturallyReductiveSpace padded_naturally_reductive(const LieAlgebra& h, const RMatrix& gram_h,
                                                   const std::vector<IsotypicBlock>& blocks, Index padding,
                                                   std::optional<Rational> padding_norm) {
  const Index dh = h.dim();
  std::vector<std::vector<RMatrix>> per_x(static_cast<std::size_t>(dh));
  std::vector<RMatrix> grams;
  for (const auto& b : blocks) {
    if (static_cast<Index>(b.pi_w.size()) != dh) throw SemanticError("representation", "block acts by the wrong number of matrices");
    const auto p = b.pi();
    for (Index i = 0; i < dh; ++i) per_x[static_cast<std::size_t>(i)].push_back(p[static_cast<std::size_t>(i)]);
    grams.push_back(b.gram());
  }
  std::vector<RMatrix> pi;
  for (const auto& ms : per_x) pi.push_back(block_diagonal(ms));
  MetricLieAlgebra nr = naturally_reductive(h, pi, gram_h, block_diagonal(grams));
  if (padding == 0) return {std::move(nr), 0, dh};
  const Rational norm = padding_norm ? *padding_norm : gram_h(0, 0);
  if (norm <= 0) throw SemanticError("metric", "padding norm must be positive");
  const RMatrix pad = norm * RMatrix::Identity(padding, padding);
  LieAlgebra l = direct_sum(LieAlgebra(padding, {}), nr.algebra);
  l.set_name("R^" + std::to_string(padding) + "+N(h,V)");
  return {MetricLieAlgebra{std::move(l), block_diagonal({pad, nr.gram})}, padding, dh};
}

MetricComplexTriple natred_complex(const LieAlgebra& h, const RMatrix& gram_h, const std::vector<IsotypicBlock>& blocks,
                                   std::optional<Rational> padding_norm) {
  const Index s = h.dim() % 2;
  const auto space = padded_naturally_reductive(h, gram_h, blocks, s, padding_norm);
  const Index dz = s + h.dim();
  std::vector<RMatrix> parts{paired_complex(RMatrix(space.metric.gram.topLeftCorner(dz, dz)))};
  for (const auto& b : blocks) parts.push_back(invariant_complex_on_isotypic(b));
  MetricComplexTriple t(space.metric.algebra, ComplexStructure(block_diagonal(parts)), space.metric.gram);
  post(is_abelian_structure(t.algebra(), t.J()), "assembled J is not abelian");
  post(is_hermitian(t.J(), t.gram()), "assembled J is not orthogonal");
  return t;
}

HypercomplexTriple natred_hypercomplex(const LieAlgebra& h, const RMatrix& gram_h,
                                       const std::vector<IsotypicBlock>& blocks, std::optional<Rational> padding_norm) {
  const Index j = h.dim() % 4 == 0 ? 4 : h.dim() % 4;
  const Index s = 4 - j;
  const auto space = padded_naturally_reductive(h, gram_h, blocks, s, padding_norm);
  const Index dz = s + h.dim();
  const auto [qa, qb] = quaternion_blocks(RMatrix(space.metric.gram.topLeftCorner(dz, dz)));
  std::vector<RMatrix> p1{qa}, p2{qb};
  for (const auto& b : blocks) {
    const auto triple = invariant_quaternionic_triple(b);
    p1.push_back(triple[0]);
    p2.push_back(triple[1]);
  }
  const RMatrix j1 = block_diagonal(p1), j2 = block_diagonal(p2);
  HypercomplexTriple out{space.metric.algebra,
                         HypercomplexStructure{ComplexStructure(j1), ComplexStructure(j2), ComplexStructure(RMatrix(j1 * j2))},
                         space.metric.gram};
  post(!validate_hypercomplex(out.algebra, out.structure), "assembled triple is not hypercomplex");
  post(is_abelian_hypercomplex(out.algebra, out.structure), "assembled hypercomplex structure is not abelian");
  post(is_hyper_hermitian(out.structure, out.gram), "metric is not hyper-Hermitian");
  return out;
}

LieAlgebra su2() {
  auto e = [](Index k, int sign) {
    RVector v = RVector::Zero(3);
    v(k) = sign;
    return v;
  };
  return LieAlgebra(3, {{0, 1, e(2, 1)}, {1, 2, e(0, 1)}, {0, 2, e(1, -1)}}, "su(2)");
}

std::vector<RMatrix> su2_quaternionic_rep() {
  // Columns: images of 1, i, j, k.
  RMatrix li = RMatrix::Zero(4, 4), lj = RMatrix::Zero(4, 4), lk = RMatrix::Zero(4, 4);
  li(1, 0) = 1, li(0, 1) = -1, li(3, 2) = 1, li(2, 3) = -1;
  lj(2, 0) = 1, lj(3, 1) = -1, lj(0, 2) = -1, lj(1, 3) = 1;
  lk(3, 0) = 1, lk(2, 1) = 1, lk(1, 2) = -1, lk(0, 3) = -1;
  const Rational half(1, 2);
  return {RMatrix(half * li), RMatrix(half * lj), RMatrix(half * lk)};
}

std::vector<RMatrix> adjoint_rep(const LieAlgebra& l) {
  std::vector<RMatrix> out;
  for (Index i = 0; i < l.dim(); ++i) out.push_back(l.ad(unit_vector<Rational>(l.dim(), i)));
  return out;
}

std::vector<RMatrix> rotation_rep() {
  RMatrix r = RMatrix::Zero(2, 2);
  r(1, 0) = 1;
  r(0, 1) = -1;
  return {r};
}

}  // namespace nilherm
