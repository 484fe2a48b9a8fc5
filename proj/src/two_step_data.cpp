#include "nilherm/two_step_data.hpp"

#include <sstream>

#include "nilherm/random.hpp"

namespace nilherm {

namespace {

RVector vec(const RMatrix& m) {
  RVector out(m.size());
  Index p = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(p++) = m(i, j);
  return out;
}

RMatrix columns(const std::vector<RVector>& cols, Index rows) {
  RMatrix out(rows, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = cols[j];
  return out;
}

bool commutes(const RMatrix& a, const RMatrix& b) { return RMatrix(a * b) == RMatrix(b * a); }

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

Subspace unit_span(Index n, Index from, Index count) {
  RMatrix m = RMatrix::Zero(n, count);
  for (Index i = 0; i < count; ++i) m(from + i, i) = 1;
  return Subspace::span(m);
}

RMatrix standard_complex(Index n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    j(k + n, k) = 1;
    j(k, k + n) = -1;
  }
  return j;
}

// psi applied to an n0 vector of b.
RMatrix psi_on_b(const Complex2StepData& d, const RVector& x) {
  auto c = d.b.coordinates(x);
  if (!c) throw PreconditionError("shape", "vector is not in b");
  RMatrix out = RMatrix::Zero(d.v.dim(), d.v.dim());
  for (Index i = 0; i < c->size(); ++i)
    if (!is_zero((*c)(i))) out += (*c)(i) * d.psi_b[static_cast<std::size_t>(i)];
  return out;
}

RMatrix j0_on_b(const Complex2StepData& d, const std::vector<RMatrix>& j0, const RVector& x) {
  auto c = d.b.coordinates(x);
  if (!c) throw PreconditionError("shape", "vector is not in b");
  RMatrix out = RMatrix::Zero(d.v.dim(), d.v.dim());
  for (Index i = 0; i < c->size(); ++i)
    if (!is_zero((*c)(i))) out += (*c)(i) * j0[static_cast<std::size_t>(i)];
  return out;
}

// Greedy choice of x_1, x_2, ... inside the J-invariant span of `candidates`
// with x_i ⟂ J x_j for all i, j; each candidate is first projected off the
// span of the J x already chosen.
RMatrix lagrangian_half(const RMatrix& candidates, const RMatrix& j, const RMatrix& g, bool reverse) {
  const Index n = candidates.rows();
  std::vector<RVector> chosen;
  const Index count = candidates.cols();
  for (Index step = 0; step < count; ++step) {
    const Index col = reverse ? count - 1 - step : step;
    RVector c = candidates.col(col);
    RMatrix x = columns(chosen, n);
    if (!chosen.empty()) c -= orthogonal_projector(Subspace::span(RMatrix(j * x)), g) * c;
    RMatrix both(n, 2 * x.cols());
    both << x, RMatrix(j * x);
    if (Subspace::span(both).contains(c)) continue;
    chosen.push_back(c);
  }
  if (reverse) std::reverse(chosen.begin(), chosen.end());
  return columns(chosen, n);
}

struct Assembly {
  TwoStepLayout lay;
  RMatrix gram;
  RMatrix j;
  std::vector<RMatrix> jz;  // j on each z0 unit vector, in v coordinates
};

Assembly assemble_parts(const Complex2StepData& d) {
  Assembly a;
  a.lay = layout_of(d);
  const auto& lay = a.lay;
  const RMatrix gv = d.v.basis().transpose() * d.g0 * d.v.basis();
  const RMatrix gb = d.b.basis().transpose() * d.g0 * d.b.basis();
  const RMatrix gz1 = lay.r > 0 ? d.z1_gram : RMatrix(0, 0);
  a.gram = block_diagonal({gz1, gz1, gb, gb, gv});

  a.j = RMatrix::Zero(lay.dim(), lay.dim());
  for (Index i = 0; i < lay.r; ++i) {
    a.j(lay.jz1() + i, lay.z1() + i) = 1;
    a.j(lay.z1() + i, lay.jz1() + i) = -1;
  }
  for (Index i = 0; i < lay.k; ++i) {
    a.j(lay.jb() + i, lay.b() + i) = 1;
    a.j(lay.b() + i, lay.jb() + i) = -1;
  }
  a.j.block(lay.v(), lay.v(), lay.m, lay.m) = d.jv;

  const std::vector<RMatrix> j0 = j0_maps(d);
  const Rational half(1, 2);
  const RMatrix zero = RMatrix::Zero(lay.m, lay.m);
  for (Index i = 0; i < lay.r; ++i) a.jz.push_back(zero);
  for (Index i = 0; i < lay.r; ++i) a.jz.push_back(d.psi_z1[static_cast<std::size_t>(i)]);
  for (Index i = 0; i < lay.k; ++i) {
    const RMatrix& t = j0[static_cast<std::size_t>(i)];
    a.jz.push_back(RMatrix(half * (d.jv * t - t * d.jv)) + d.psi_b[static_cast<std::size_t>(i)]);
  }
  for (Index i = 0; i < lay.k; ++i) a.jz.push_back(j0[static_cast<std::size_t>(i)]);
  return a;
}

LieAlgebra bracket_from_j(const Assembly& a) {
  const auto& lay = a.lay;
  const Index nz = lay.v();
  const RMatrix gz_inv = inverse(RMatrix(a.gram.topLeftCorner(nz, nz)));
  const RMatrix gv = a.gram.bottomRightCorner(lay.m, lay.m);
  std::vector<RMatrix> gm;
  for (const auto& m : a.jz) gm.push_back(gv * m);
  std::vector<BracketEntry> entries;
  for (Index p = 0; p < lay.m; ++p)
    for (Index q = p + 1; q < lay.m; ++q) {
      RVector y(nz);
      for (Index s = 0; s < nz; ++s) y(s) = gm[static_cast<std::size_t>(s)](q, p);
      if (is_zero_matrix(y)) continue;
      RVector full = RVector::Zero(lay.dim());
      full.head(nz) = gz_inv * y;
      entries.push_back({lay.v() + p, lay.v() + q, full});
    }
  return LieAlgebra(lay.dim(), entries);
}

}  // namespace

bool Complex2StepData::operator==(const Complex2StepData& o) const {
  return n0 == o.n0 && g0 == o.g0 && b == o.b && v == o.v && jv == o.jv && z1_dim == o.z1_dim &&
         z1_gram == o.z1_gram && psi_z1 == o.psi_z1 && psi_b == o.psi_b && p_plus == o.p_plus &&
         p_minus == o.p_minus && a1 == o.a1;
}

TwoStepType type_of(const Complex2StepData& d) {
  return {d.z1_dim, d.p_plus.dim(), d.p_minus.dim(), d.a1.dim(), d.v.dim() / 2};
}

std::string to_string(const TwoStepType& t) {
  std::ostringstream s;
  s << '(' << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ',' << t[4] << ')';
  return s.str();
}

TwoStepLayout layout_of(const Complex2StepData& d) { return {d.z1_dim, d.b.dim(), d.v.dim()}; }

std::vector<RMatrix> j0_maps(const Complex2StepData& d) {
  return j_map(d.n0, d.g0, d.b, d.v.basis()).j;
}

std::vector<Violation> validate_2step_data(const Complex2StepData& d) {
  std::vector<Violation> out;
  auto fail = [&](const char* clause, const std::string& what) { out.push_back({clause, what}); };

  const Index n = d.n0.dim();
  const Index m = d.v.dim();
  const Index r = d.z1_dim;
  const Index k = d.b.dim();
  {
    bool ok = d.g0.rows() == n && d.g0.cols() == n && d.b.ambient_dim() == n && d.v.ambient_dim() == n &&
              d.jv.rows() == m && d.jv.cols() == m && static_cast<Index>(d.psi_z1.size()) == r &&
              static_cast<Index>(d.psi_b.size()) == k && d.p_plus.ambient_dim() == n &&
              d.p_minus.ambient_dim() == n && d.a1.ambient_dim() == n && r >= 0 &&
              (r == 0 || (d.z1_gram.rows() == r && d.z1_gram.cols() == r));
    for (const auto& p : d.psi_z1) ok = ok && p.rows() == m && p.cols() == m;
    for (const auto& p : d.psi_b) ok = ok && p.rows() == m && p.cols() == m;
    if (!ok) {
      fail("shape", "component sizes are inconsistent");
      return out;
    }
    if (!is_positive_definite(d.g0)) fail("shape", "g0 is not positive definite");
    if (r > 0 && !is_positive_definite(d.z1_gram)) fail("shape", "the metric on z1 is not positive definite");
    if (!out.empty()) return out;
  }

  // (i)
  const bool abelian = d.n0.is_abelian();
  if (!abelian && !is_two_step(d.n0)) fail("(i)", "n0 is neither abelian nor 2-step nilpotent");
  if (d.b != commutator_ideal(d.n0)) fail("(i)", "b is not the commutator ideal of n0");
  if ((n - k) % 2 != 0) fail("(i)", "b has odd codimension");
  // (ii)
  if (d.v != orthogonal_complement(d.b, d.g0)) fail("(ii)", "v is not the orthogonal complement of b");
  const RMatrix gv = d.v.basis().transpose() * d.g0 * d.v.basis();
  if (!is_complex_structure(d.jv)) fail("(ii)", "J_v does not square to -I");
  if (RMatrix(d.jv.transpose() * gv * d.jv) != gv) fail("(ii)", "J_v is not orthogonal");
  if (!out.empty()) return out;

  // (iii)
  if (abelian && r == 0) fail("(iii)", "z1 must be nonzero when n0 is abelian");
  auto in_u = [&](const RMatrix& t) { return commutes(t, d.jv) && is_skew(RMatrix(gv * t)); };
  for (Index i = 0; i < r; ++i)
    if (!in_u(d.psi_z1[static_cast<std::size_t>(i)])) fail("(iii)", "psi(z1) is not in u(n)");
  for (Index i = 0; i < k; ++i)
    if (!in_u(d.psi_b[static_cast<std::size_t>(i)])) fail("(iii)", "psi(b) is not in u(n)");
  if (!d.b.contains(d.p_plus) || !d.b.contains(d.p_minus) || !d.b.contains(d.a1)) {
    fail("(iv)", "p+, p- and a1 must lie in b");
    return out;
  }
  {
    std::vector<RVector> img;
    for (const auto& p : d.psi_z1) img.push_back(vec(p));
    for (Index i = 0; i < d.p_plus.dim(); ++i) img.push_back(vec(psi_on_b(d, d.p_plus.basis().col(i))));
    if (rank(columns(img, m * m)) != static_cast<Index>(img.size()))
      fail("(iii)", "psi is not injective on z1 + p+");
  }
  for (Index i = 0; i < d.p_minus.dim(); ++i)
    if (!is_zero_matrix(psi_on_b(d, d.p_minus.basis().col(i)))) fail("(iii)", "p- is not in ker psi");
  RMatrix psi_stack(m * m, r + k);
  for (Index i = 0; i < r; ++i) psi_stack.col(i) = vec(d.psi_z1[static_cast<std::size_t>(i)]);
  for (Index i = 0; i < k; ++i) psi_stack.col(r + i) = vec(d.psi_b[static_cast<std::size_t>(i)]);
  {
    const RMatrix ker = row_echelon(psi_stack).kernel();
    for (Index c = 0; c < ker.cols(); ++c) {
      RVector projected = ker.col(c);
      projected.head(r).setZero();
      if (!is_zero_matrix(RVector(psi_stack * projected))) {
        fail("(iii)", "the projection of ker psi to b is not contained in ker psi");
        break;
      }
    }
  }

  // (iv)
  const std::vector<RMatrix> j0 = j0_maps(d);
  {
    std::vector<RVector> plus;
    for (const auto& t : j0) plus.push_back(vec(plus_minus_parts(t, d.jv).first));
    const RMatrix pm = columns(plus, m * m);
    RMatrix both(m * m, pm.cols() + psi_stack.cols());
    both << pm, psi_stack;
    if (rank(both) != rank(pm) + rank(psi_stack)) fail("(iv)", "Im (j0)+ meets Im psi");
  }
  for (Index i = 0; i < d.p_plus.dim(); ++i)
    if (!commutes(j0_on_b(d, j0, d.p_plus.basis().col(i)), d.jv)) fail("(iv)", "j0(p+) is not in u(n)");
  for (Index i = 0; i < d.p_minus.dim(); ++i)
    if (!is_zero_matrix(plus_minus_parts(j0_on_b(d, j0, d.p_minus.basis().col(i)), d.jv).first))
      fail("(iv)", "j0(p-) has a nonzero commuting part");
  {
    RMatrix pm(n, d.p_plus.dim() + d.p_minus.dim());
    pm << d.p_plus.basis(), d.p_minus.basis();
    if (!is_zero_matrix(RMatrix(d.a1.basis().transpose() * d.g0 * pm)))
      fail("(iv)", "a1 is not orthogonal to p+ + p-");
  }
  if (d.p_plus.dim() + d.p_minus.dim() + d.a1.dim() != k || sum(sum(d.p_plus, d.p_minus), d.a1) != d.b)
    fail("(iv)", "b is not the direct sum of p+, p- and a1");
  return out;
}

MetricComplexTriple assemble_2step_unchecked(const Complex2StepData& d) {
  const Assembly a = assemble_parts(d);
  LieAlgebra l = bracket_from_j(a);
  l.set_name("2-step data");
  return MetricComplexTriple(std::move(l), ComplexStructure(a.j), a.gram);
}

MetricComplexTriple build_from_2step_data(const Complex2StepData& d) {
  const auto violations = validate_2step_data(d);
  if (!violations.empty()) throw SemanticError(violations.front().clause, violations.front().detail);
  const Assembly a = assemble_parts(d);
  LieAlgebra l = bracket_from_j(a);
  l.set_name("2-step data");
  MetricComplexTriple t(std::move(l), ComplexStructure(a.j), a.gram);
  const auto& lay = a.lay;
  const Index n = lay.dim();
  auto post = [](bool ok, const char* what) {
    if (!ok) throw SemanticError("postcondition", what);
  };
  if (commutator_ideal(t.algebra()) != unit_span(n, lay.z1(), lay.r + 2 * lay.k))
    throw SemanticError("j-injective", "j is not injective on z1 + Jb + b, so n' is too small");
  post(is_integrable(t.algebra(), t.J()), "assembled J is not integrable");
  post(j_nilpotent_step(t.algebra(), t.J()) == 2, "assembled J is not 2-step");
  post(j_invariant_commutator(t.algebra(), t.J()) == unit_span(n, lay.jb(), 2 * lay.k), "n'_J is not Jb + b");
  post(!has_central_complex_abelian_factor(t.algebra(), t.J()), "central complex abelian factor present");

  const Subspace z0 = unit_span(n, 0, lay.v());
  RMatrix vb = RMatrix::Zero(n, lay.m);
  vb.bottomRows(lay.m) = RMatrix::Identity(lay.m, lay.m);
  const JMapPackage pkg = j_map(t.algebra(), t.gram(), z0, vb);
  const std::vector<RMatrix> s = s_map(pkg, t.J());
  const std::vector<RMatrix> j0 = j0_maps(d);
  const RMatrix& jv = d.jv;
  const Rational half(1, 2);
  for (Index i = 0; i < lay.r; ++i) {
    const RMatrix& psi = d.psi_z1[static_cast<std::size_t>(i)];
    post(s[static_cast<std::size_t>(lay.jz1() + i)] == RMatrix(-psi), "S on J z1 disagrees");
    post(s[static_cast<std::size_t>(lay.z1() + i)] == RMatrix(-(jv * psi)), "S on z1 disagrees");
  }
  for (Index i = 0; i < lay.k; ++i) {
    const RMatrix& t0 = j0[static_cast<std::size_t>(i)];
    const RMatrix& psi = d.psi_b[static_cast<std::size_t>(i)];
    const RMatrix anti = jv * t0 + t0 * jv;
    post(s[static_cast<std::size_t>(lay.jb() + i)] == RMatrix(half * (jv * anti) - jv * psi), "S on Jb disagrees");
    post(s[static_cast<std::size_t>(lay.b() + i)] == RMatrix(-half * anti + psi), "S on b disagrees");
  }
  return t;
}

NjDecomposition decompose_njprime(const MetricComplexTriple& t) {
  const auto& l = t.algebra();
  const auto& j = t.J();
  if (j_nilpotent_step(l, j) != 2) throw PreconditionError("step", "J is not 2-step");
  const Subspace d = commutator_ideal(l);
  const Subspace nj = intersection(d, j.apply(d));
  const Subspace z0 = sum(d, j.apply(d));
  const JMapPackage pkg = j_map(t, z0);
  const RMatrix jv = restrict_to_v(pkg, j);
  const Index m = pkg.v_basis.cols();
  NjDecomposition out;
  if (nj.dim() == 0) {
    out.plus = out.ker_s = out.rest = nj;
    return out;
  }
  RMatrix minus(m * m, nj.dim()), svals(m * m, nj.dim());
  for (Index i = 0; i < nj.dim(); ++i) {
    const RVector z = nj.basis().col(i);
    const RMatrix jz = pkg.at(z);
    minus.col(i) = vec(plus_minus_parts(jz, jv).second);
    svals.col(i) = vec(RMatrix(pkg.at(j(z)) - jv * jz));
  }
  out.plus = image(nj.basis(), kernel(minus));
  out.ker_s = image(nj.basis(), kernel(svals));
  out.rest = intersection(nj, orthogonal_complement(sum(out.plus, out.ker_s), t.gram()));
  return out;
}

MetricComplexTriple change_basis(const MetricComplexTriple& t, const RMatrix& p) {
  LieAlgebra l = t.algebra().change_basis(p);
  l.set_name(t.algebra().name());
  return MetricComplexTriple(std::move(l), ComplexStructure(RMatrix(inverse(p) * t.J().matrix() * p)),
                             RMatrix(p.transpose() * t.gram() * p));
}

bool same_triple(const MetricComplexTriple& a, const MetricComplexTriple& b) {
  return a.algebra() == b.algebra() && a.J() == b.J() && a.gram() == b.gram();
}

TwoStepExtraction extract_2step_data(const MetricComplexTriple& t) {
  const auto& l = t.algebra();
  const auto& j = t.J();
  const RMatrix& g = t.gram();
  const RMatrix& jm = j.matrix();
  if (!is_two_step(l)) throw PreconditionError("2-step", "algebra is not 2-step nilpotent");
  if (!is_integrable(l, j)) throw PreconditionError("integrable", "J is not integrable");
  if (j_nilpotent_step(l, j) != 2) throw PreconditionError("step", "J is not 2-step");
  if (has_central_complex_abelian_factor(l, j))
    throw PreconditionError("abelian-factor", "a central complex abelian factor is present");

  const Index n = l.dim();
  const Subspace d = commutator_ideal(l);
  const Subspace nj = intersection(d, j.apply(d));
  const Subspace z1 = intersection(d, orthogonal_complement(nj, g));
  const RMatrix& zb = z1.basis();
  if (!is_zero_matrix(RMatrix(RMatrix(jm * zb).transpose() * g * d.basis())))
    throw PreconditionError("Jz1⊥n'", "J z1 is not orthogonal to n'");
  const Subspace z0 = sum(d, j.apply(d));
  const Subspace v = orthogonal_complement(z0, g);

  const RMatrix x = lagrangian_half(v.basis(), jm, g, false);
  RMatrix vb(n, v.dim());
  vb << x, RMatrix(jm * x);
  const JMapPackage pkg = j_map(l, g, z0, vb);
  const Index half_v = x.cols();
  const RMatrix jv = standard_complex(half_v);

  const NjDecomposition parts = decompose_njprime(t);
  const RMatrix pp = lagrangian_half(parts.plus.basis(), jm, g, true);
  const RMatrix pm = lagrangian_half(parts.ker_s.basis(), jm, g, true);
  const RMatrix pa = lagrangian_half(parts.rest.basis(), jm, g, true);
  const Index dp = pp.cols(), dm = pm.cols(), da = pa.cols(), k = dp + dm + da;
  RMatrix bb(n, k);
  bb << pp, pm, pa;
  if (!is_zero_matrix(RMatrix(bb.transpose() * g * jm * bb)))
    throw PreconditionError("b⊥Jb", "no orthogonal splitting n'_J = b + Jb adapted to the decomposition");

  // n0 = b + v in the basis [b | x | Jx].
  const Index n0_dim = k + vb.cols();
  RMatrix n0b(n, n0_dim);
  n0b << bb, vb;
  const RMatrix coord_b = k > 0 ? RMatrix(inverse(RMatrix(bb.transpose() * g * bb)) * bb.transpose() * g)
                                : RMatrix(0, n);
  std::vector<BracketEntry> entries;
  for (Index a = 0; a < n0_dim; ++a)
    for (Index c = a + 1; c < n0_dim; ++c) {
      const RVector w = l.bracket(RVector(n0b.col(a)), RVector(n0b.col(c)));
      if (is_zero_matrix(w)) continue;
      RVector full = RVector::Zero(n0_dim);
      full.head(k) = coord_b * w;
      if (!is_zero_matrix(full)) entries.push_back({a, c, full});
    }

  Complex2StepData data;
  data.n0 = LieAlgebra(n0_dim, entries, "n0");
  data.g0 = n0b.transpose() * g * n0b;
  data.b = unit_span(n0_dim, 0, k);
  data.v = unit_span(n0_dim, k, vb.cols());
  data.jv = jv;
  data.z1_dim = z1.dim();
  data.z1_gram = zb.transpose() * g * zb;
  for (Index i = 0; i < z1.dim(); ++i) data.psi_z1.push_back(pkg.at(zb.col(i)));
  const Rational half(1, 2);
  for (Index i = 0; i < k; ++i) {
    const RVector bi = bb.col(i);
    const RMatrix jb = pkg.at(bi);
    data.psi_b.push_back(pkg.at(RVector(jm * bi)) - half * RMatrix(jv * jb - jb * jv));
  }
  data.p_plus = unit_span(n0_dim, 0, dp);
  data.p_minus = unit_span(n0_dim, dp, dm);
  data.a1 = unit_span(n0_dim, dp + dm, da);

  const auto violations = validate_2step_data(data);
  if (!violations.empty())
    throw SemanticError("extract", "extracted data violates " + violations.front().clause + ": " +
                                       violations.front().detail);

  TwoStepExtraction out;
  out.adapted_basis = RMatrix(n, n);
  out.adapted_basis << RMatrix(jm * zb), zb, RMatrix(jm * bb), bb, vb;
  out.data = std::move(data);
  return out;
}

namespace {

RMatrix random_u(Rng& rng, Index n, std::int64_t bound) {
  const RMatrix a = rng.skew(n, bound);
  RMatrix s = rng.matrix(n, n, bound);
  s = RMatrix(s + s.transpose());
  RMatrix k(2 * n, 2 * n);
  k << a, s, -s, a;
  return k;
}

RMatrix random_minus(Rng& rng, Index n, std::int64_t bound) {
  const RMatrix a = rng.skew(n, bound);
  const RMatrix b = rng.skew(n, bound);
  RMatrix k(2 * n, 2 * n);
  k << a, b, b, -a;
  return k;
}

// n0 = b + v with metric blockdiag(gb, gv) and j0(b_s) = j0[s] (v coordinates).
LieAlgebra n0_from_j0(const std::vector<RMatrix>& j0, const RMatrix& gb, const RMatrix& gv) {
  const Index k = static_cast<Index>(j0.size());
  const Index m = gv.rows();
  const RMatrix gb_inv = k > 0 ? inverse(gb) : RMatrix(0, 0);
  std::vector<RMatrix> gm;
  for (const auto& t : j0) gm.push_back(gv * t);
  std::vector<BracketEntry> entries;
  for (Index p = 0; p < m; ++p)
    for (Index q = p + 1; q < m; ++q) {
      RVector y(k);
      for (Index s = 0; s < k; ++s) y(s) = gm[static_cast<std::size_t>(s)](q, p);
      if (is_zero_matrix(y)) continue;
      RVector full = RVector::Zero(k + m);
      full.head(k) = gb_inv * y;
      entries.push_back({k + p, k + q, full});
    }
  return LieAlgebra(k + m, entries, "n0");
}

Complex2StepData assemble_data(const std::vector<RMatrix>& j0, const RMatrix& gb, const RMatrix& gv,
                               const RMatrix& jv, Index r, const RMatrix& z1_gram,
                               std::vector<RMatrix> psi_z1, std::vector<RMatrix> psi_b, Index dp, Index dm) {
  const Index k = static_cast<Index>(j0.size());
  const Index m = gv.rows();
  Complex2StepData d;
  d.n0 = n0_from_j0(j0, gb, gv);
  d.g0 = block_diagonal({gb, gv});
  d.b = unit_span(k + m, 0, k);
  d.v = unit_span(k + m, k, m);
  d.jv = jv;
  d.z1_dim = r;
  d.z1_gram = z1_gram;
  d.psi_z1 = std::move(psi_z1);
  d.psi_b = std::move(psi_b);
  d.p_plus = unit_span(k + m, 0, dp);
  d.p_minus = unit_span(k + m, dp, dm);
  d.a1 = unit_span(k + m, dp + dm, k - dp - dm);
  return d;
}

}  // namespace

Complex2StepData random_2step_data(const TwoStepType& type, std::uint64_t seed) {
  const auto [r, dp, dm, da, n] = type;
  const Index k = dp + dm + da;
  if (r < 0 || dp < 0 || dm < 0 || da < 0 || n < 1) throw PreconditionError("type", "invalid type " + to_string(type));
  if (k == 0 && r == 0) throw PreconditionError("type", "abelian n0 needs z1 != 0");
  if (r + 2 * k > n * (2 * n - 1)) throw PreconditionError("type", "j cannot be injective for type " + to_string(type));
  if ((dp + da) + (r + dp + da) > n * n)
    throw PreconditionError("type", "u(n) is too small for type " + to_string(type));
  Rng rng(seed);
  const RMatrix jv = standard_complex(n);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const RMatrix h = rng.positive_definite(n, 1);
    const RMatrix gv = block_diagonal({h, h});
    const RMatrix gv_inv = inverse(gv);
    std::vector<RMatrix> blocks;
    if (dp > 0) blocks.push_back(rng.positive_definite(dp, 1));
    if (dm > 0) blocks.push_back(rng.positive_definite(dm, 1));
    if (da > 0) blocks.push_back(rng.positive_definite(da, 1));
    const RMatrix gb = block_diagonal(blocks);
    const RMatrix z1_gram = r > 0 ? rng.positive_definite(r, 1) : RMatrix(0, 0);
    std::vector<RMatrix> j0, psi_z1, psi_b;
    for (Index i = 0; i < dp; ++i) j0.push_back(gv_inv * random_u(rng, n, 2));
    for (Index i = 0; i < dm; ++i) j0.push_back(gv_inv * random_minus(rng, n, 2));
    for (Index i = 0; i < da; ++i) j0.push_back(gv_inv * rng.skew(2 * n, 2));
    for (Index i = 0; i < r; ++i) psi_z1.push_back(gv_inv * random_u(rng, n, 2));
    for (Index i = 0; i < k; ++i)
      psi_b.push_back(i >= dp && i < dp + dm ? RMatrix(RMatrix::Zero(2 * n, 2 * n))
                                             : RMatrix(gv_inv * random_u(rng, n, 2)));
    try {
      Complex2StepData d = assemble_data(j0, gb, gv, jv, r, z1_gram, psi_z1, psi_b, dp, dm);
      if (!validate_2step_data(d).empty()) continue;
      build_from_2step_data(d);
      return d;
    } catch (const SemanticError&) {
      continue;
    }
  }
  throw SemanticError("random", "no valid data found for type " + to_string(type));
}

Complex2StepData example_2step_data(TwoStepExample kind, Index n) {
  if (n < 2) throw PreconditionError("n", "the example family needs dim v >= 4");
  const RMatrix jv = standard_complex(n);
  RMatrix a = RMatrix::Zero(n, n);
  a(1, 0) = 1;
  a(0, 1) = -1;
  const RMatrix z = RMatrix::Zero(n, n);
  RMatrix k(2 * n, 2 * n);
  RMatrix psi = jv;
  Index dp = 0, dm = 0;
  switch (kind) {
    case TwoStepExample::Abelian:
      k << a, z, z, a;
      dp = 1;
      break;
    case TwoStepExample::BiInvariant:
      k << a, z, z, -a;
      psi = RMatrix::Zero(2 * n, 2 * n);
      dm = 1;
      break;
    case TwoStepExample::MinusWithPsi:
      k << a, z, z, -a;
      break;
    case TwoStepExample::Mixed:
      k << a, z, z, z;
      break;
  }
  const RMatrix one = RMatrix::Identity(1, 1);
  const RMatrix gv = RMatrix::Identity(2 * n, 2 * n);
  return assemble_data({k}, one, gv, jv, 0, RMatrix(0, 0), {}, {psi}, dp, dm);
}

}  // namespace nilherm
