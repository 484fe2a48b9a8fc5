#include "nilherm/hermitian.hpp"

#include "nilherm/random.hpp"

namespace nilherm {

bool is_hermitian(const ComplexStructure& j, const RMatrix& g) {
  return RMatrix(j.matrix().transpose() * g * j.matrix()) == g;
}

RMatrix hermitian_average(const ComplexStructure& j, const RMatrix& h) {
  return h + RMatrix(j.matrix().transpose() * h * j.matrix());
}

MetricComplexTriple::MetricComplexTriple(LieAlgebra l, ComplexStructure j, RMatrix g)
    : l_(std::move(l)), j_(std::move(j)), g_(std::move(g)) {
  if (j_.dim() != l_.dim() || g_.rows() != l_.dim() || g_.cols() != l_.dim())
    throw SemanticError("dimension", "algebra, complex structure and metric sizes differ");
  if (!is_positive_definite(g_)) throw SemanticError("metric", "Gram matrix is not symmetric positive definite");
  if (!is_hermitian(j_, g_)) throw SemanticError("hermitian", "metric is not J-invariant");
}

RMatrix JMapPackage::at(const RVector& z) const {
  auto c = z0.coordinates(z);
  if (!c) throw PreconditionError("z0", "vector does not lie in z0");
  RMatrix out = RMatrix::Zero(v_basis.cols(), v_basis.cols());
  for (Index i = 0; i < c->size(); ++i)
    if (!is_zero((*c)(i))) out += (*c)(i) * j[static_cast<std::size_t>(i)];
  return out;
}

RVector JMapPackage::to_v(const RVector& x) const {
  auto c = solve<Rational>(v_basis, RMatrix(x));
  if (!c || RVector(v_basis * c->col(0)) != x) throw PreconditionError("v", "vector does not lie in v");
  return c->col(0);
}

JMapPackage j_map(const LieAlgebra& l, const RMatrix& gram, const Subspace& z0, const RMatrix& v_basis) {
  const Subspace z = center(l);
  if (!z0.contains(commutator_ideal(l)) || !z.contains(z0))
    throw PreconditionError("sandwich", "z0 must satisfy n' ⊆ z0 ⊆ z");
  JMapPackage pkg;
  pkg.z0 = z0;
  pkg.v = orthogonal_complement(z0, gram);
  if (Subspace::span(v_basis) != pkg.v || v_basis.cols() != pkg.v.dim())
    throw PreconditionError("v-basis", "columns are not a basis of the orthogonal complement of z0");
  pkg.v_basis = v_basis;
  pkg.v_gram = v_basis.transpose() * gram * v_basis;
  const RMatrix gv_inv = inverse(pkg.v_gram);
  const Index m = v_basis.cols();
  std::vector<RVector> brackets(static_cast<std::size_t>(m * m));
  for (Index a = 0; a < m; ++a)
    for (Index c = a + 1; c < m; ++c)
      brackets[static_cast<std::size_t>(a * m + c)] =
          gram * l.bracket(RVector(v_basis.col(a)), RVector(v_basis.col(c)));
  RMatrix stacked(m * m, z0.dim());
  for (Index i = 0; i < z0.dim(); ++i) {
    const RVector zi = z0.basis().col(i);
    RMatrix a = RMatrix::Zero(m, m);
    for (Index p = 0; p < m; ++p)
      for (Index q = p + 1; q < m; ++q) {
        a(p, q) = zi.dot(brackets[static_cast<std::size_t>(p * m + q)]);
        a(q, p) = -a(p, q);
      }
    RMatrix ji = gv_inv * a.transpose();
    for (Index c = 0; c < m; ++c) stacked.block(c * m, i, m, 1) = ji.col(c);
    pkg.j.push_back(std::move(ji));
  }
  pkg.kernel_of_j = image(z0.basis(), kernel(stacked));
  return pkg;
}

JMapPackage j_map(const LieAlgebra& l, const RMatrix& gram, const Subspace& z0) {
  return j_map(l, gram, z0, orthogonal_complement(z0, gram).basis());
}

JMapPackage j_map(const MetricComplexTriple& t, const Subspace& z0) { return j_map(t.algebra(), t.gram(), z0); }

RMatrix restrict_to_v(const JMapPackage& pkg, const ComplexStructure& j) {
  return restrict_endomorphism(j.matrix(), pkg.v_basis);
}

std::vector<RMatrix> s_map(const JMapPackage& pkg, const ComplexStructure& j) {
  if (!j.preserves(pkg.z0)) throw PreconditionError("z0-invariant", "z0 is not J-invariant");
  const RMatrix jv = restrict_to_v(pkg, j);
  std::vector<RMatrix> out;
  for (Index i = 0; i < pkg.z0.dim(); ++i) {
    const RVector zi = pkg.z0.basis().col(i);
    out.push_back(pkg.at(j(zi)) - jv * pkg.j[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::pair<RMatrix, RMatrix> plus_minus_parts(const RMatrix& t, const RMatrix& jv) {
  if (!is_complex_structure(jv)) throw PreconditionError("J_v", "J_v does not square to -I");
  const RMatrix jtj = jv * t * jv;
  const Rational half(1, 2);
  return {RMatrix(half * (t - jtj)), RMatrix(half * (t + jtj))};
}

bool integrability_via_S(const MetricComplexTriple& t, const Subspace& z0) {
  const LieAlgebra& l = t.algebra();
  const Subspace d = commutator_ideal(l);
  if (!center(l).contains(t.J().apply(d))) throw PreconditionError("Jn'⊆z", "J n' is not central");
  if (z0 != sum(d, t.J().apply(d))) throw PreconditionError("z0", "z0 must equal n' + J n'");
  const JMapPackage pkg = j_map(t, z0);
  const RMatrix jv = restrict_to_v(pkg, t.J());
  for (const RMatrix& s : s_map(pkg, t.J()))
    if (RMatrix(s * jv) != RMatrix(jv * s)) return false;
  return true;
}

bool integrability_via_S(const MetricComplexTriple& t) {
  const Subspace d = commutator_ideal(t.algebra());
  return integrability_via_S(t, sum(d, t.J().apply(d)));
}

bool integrability_via_S(const LieAlgebra& l, const ComplexStructure& j, const RMatrix& gram) {
  return integrability_via_S(MetricComplexTriple(l, j, gram));
}

namespace {

// Precomputed bracket data shared by the torsion and dc routines.
struct BracketCache {
  Index n;
  std::vector<RVector> je;      // J e_a
  std::vector<RVector> br;      // [e_a, e_b]
  std::vector<RVector> g_jj;    // g [J e_a, J e_b]
  std::vector<bool> br_zero;

  explicit BracketCache(const MetricComplexTriple& t) : n(t.dim()) {
    const auto& l = t.algebra();
    for (Index a = 0; a < n; ++a) je.push_back(t.J().matrix().col(a));
    br.resize(static_cast<std::size_t>(n * n));
    g_jj.resize(static_cast<std::size_t>(n * n));
    br_zero.resize(static_cast<std::size_t>(n * n));
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const auto k = idx(a, b);
        br[k] = l.bracket(a, b);
        br_zero[k] = is_zero_matrix(br[k]);
        g_jj[k] = t.gram() * l.bracket(je[static_cast<std::size_t>(a)], je[static_cast<std::size_t>(b)]);
      }
  }
  std::size_t idx(Index a, Index b) const { return static_cast<std::size_t>(a * n + b); }
  // <[J e_a, J e_b], e_c>
  const Rational& jj(Index a, Index b, Index c) const { return g_jj[idx(a, b)](c); }
  Rational torsion(Index i, Index j, Index k) const { return -jj(i, j, k) - jj(j, k, i) - jj(k, i, j); }
};

}  // namespace

ThreeForm torsion_three_form(const MetricComplexTriple& t) {
  const BracketCache cache(t);
  const Index n = t.dim();
  ThreeForm c;
  c.dim = n;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        const Rational v = cache.torsion(i, j, k);
        if (cache.torsion(j, i, k) != -v || cache.torsion(i, k, j) != -v || cache.torsion(k, j, i) != -v)
          throw SemanticError("torsion-antisymmetry", "torsion form is not alternating");
        if (!is_zero(v)) c.entries[{i, j, k}] = v;
      }
  return c;
}

FourForm dc_four_form(const MetricComplexTriple& t) {
  const BracketCache cache(t);
  const Index n = t.dim();
  const auto& l = t.algebra();
  const RMatrix& g = t.gram();
  // K[(p, c)] = g [J [e_p0, e_p1], J e_c] for pairs with a nonzero bracket.
  std::map<std::pair<std::size_t, Index>, RVector> k_cache;
  auto k_vec = [&](Index a, Index b, Index c) -> const RVector& {
    const auto key = std::make_pair(cache.idx(a, b), c);
    auto it = k_cache.find(key);
    if (it == k_cache.end()) {
      const RVector jbr = t.J().matrix() * cache.br[cache.idx(a, b)];
      it = k_cache.emplace(key, RVector(g * l.bracket(jbr, cache.je[static_cast<std::size_t>(c)]))).first;
    }
    return it->second;
  };
  // <[J[a,b], Jx], y> + <[Jx, Jy], [a,b]> + <[Jy, J[a,b]], x>
  auto row = [&](Index a, Index b, Index x, Index y) -> Rational {
    if (cache.br_zero[cache.idx(a, b)]) return Rational(0);
    return k_vec(a, b, x)(y) + cache.br[cache.idx(a, b)].dot(cache.g_jj[cache.idx(x, y)]) - k_vec(a, b, y)(x);
  };
  FourForm dc;
  dc.dim = n;
  for (Index w = 0; w < n; ++w)
    for (Index u = w + 1; u < n; ++u)
      for (Index y = u + 1; y < n; ++y)
        for (Index z = y + 1; z < n; ++z) {
          const Rational v = row(w, u, y, z) - row(w, y, u, z) + row(w, z, u, y) + row(u, y, w, z) -
                             row(u, z, w, y) + row(y, z, w, u);
          if (!is_zero(v)) dc.entries[{w, u, y, z}] = v;
        }
  return dc;
}

FourForm chevalley_eilenberg_d(const LieAlgebra& l, const ThreeForm& c) {
  const Index n = l.dim();
  auto c_at = [&](Index i, Index j, Index k) -> Rational {
    if (i == j || j == k || i == k) return Rational(0);
    std::array<Index, 3> a{i, j, k};
    int sign = 1;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 2 - p; ++q)
        if (a[q] > a[q + 1]) {
          std::swap(a[q], a[q + 1]);
          sign = -sign;
        }
    return sign > 0 ? c.at(a) : Rational(-c.at(a));
  };
  FourForm d;
  d.dim = n;
  for (Index x0 = 0; x0 < n; ++x0)
    for (Index x1 = x0 + 1; x1 < n; ++x1)
      for (Index x2 = x1 + 1; x2 < n; ++x2)
        for (Index x3 = x2 + 1; x3 < n; ++x3) {
          const std::array<Index, 4> x{x0, x1, x2, x3};
          Rational total(0);
          for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
              std::array<Index, 2> rest{};
              int r = 0;
              for (int s = 0; s < 4; ++s)
                if (s != p && s != q) rest[r++] = x[s];
              const RVector b = l.bracket(x[p], x[q]);
              Rational term(0);
              for (Index m = 0; m < n; ++m)
                if (!is_zero(b(m))) term += b(m) * c_at(m, rest[0], rest[1]);
              if ((p + q) % 2 == 0) {
                total += term;
              } else {
                total -= term;
              }
            }
          if (!is_zero(total)) d.entries[x] = total;
        }
  return d;
}

bool is_pluriclosed(const MetricComplexTriple& t) { return dc_four_form(t).is_zero(); }

std::optional<FormWitness> pluriclosed_2step_violation(const MetricComplexTriple& t) {
  const LieAlgebra& l = t.algebra();
  if (!is_two_step(l)) throw PreconditionError("2-step", "algebra is not 2-step nilpotent");
  if (!is_integrable(l, t.J())) throw PreconditionError("integrable", "J is not integrable");
  if (j_nilpotent_step(l, t.J()) != 2) throw PreconditionError("Step(2)", "J is not 2-step");
  const BracketCache cache(t);
  const Index n = t.dim();
  auto term = [&](Index a, Index b, Index c, Index d) -> Rational {
    // <[J e_a, J e_b], [e_c, e_d]>
    if (cache.br_zero[cache.idx(c, d)]) return Rational(0);
    return cache.br[cache.idx(c, d)].dot(cache.g_jj[cache.idx(a, b)]);
  };
  for (Index w = 0; w < n; ++w)
    for (Index u = w + 1; u < n; ++u)
      for (Index y = u + 1; y < n; ++y)
        for (Index z = y + 1; z < n; ++z) {
          const Rational v = term(y, z, w, u) - term(u, z, w, y) + term(u, y, w, z) + term(w, z, u, y) -
                             term(w, y, u, z) + term(w, u, y, z);
          if (!is_zero(v)) return FormWitness{{w, u, y, z}, v};
        }
  return std::nullopt;
}

bool pluriclosed_criterion_2step(const MetricComplexTriple& t) { return !pluriclosed_2step_violation(t); }

std::optional<TripleWitness> pluriclosed_abelian_violation(const MetricComplexTriple& t) {
  const LieAlgebra& l = t.algebra();
  if (!is_two_step(l)) throw PreconditionError("2-step", "algebra is not 2-step nilpotent");
  if (!is_abelian_structure(l, t.J())) throw PreconditionError("abelian-J", "J is not abelian");
  const JMapPackage pkg = j_map(t, center(l));
  const Index m = pkg.v_basis.cols();
  auto br = [&](Index a, Index b) {
    return pkg.at(l.bracket(RVector(pkg.v_basis.col(a)), RVector(pkg.v_basis.col(b))));
  };
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      for (Index c = b + 1; c < m; ++c) {
        RVector v = br(a, b) * unit_vector<Rational>(m, c) + br(b, c) * unit_vector<Rational>(m, a) +
                    br(c, a) * unit_vector<Rational>(m, b);
        if (!is_zero_matrix(v)) return TripleWitness{a, b, c, std::move(v)};
      }
  return std::nullopt;
}

bool pluriclosed_criterion_abelian(const MetricComplexTriple& t) { return !pluriclosed_abelian_violation(t); }

CenterSamplingReport pluriclosed_center_sampling_check(const MetricComplexTriple& t, std::uint64_t seed,
                                                       int samples) {
  const LieAlgebra& l = t.algebra();
  const Subspace z = center(l);
  CenterSamplingReport r;
  r.seed = seed;
  r.samples = samples;
  r.inclusion_holds = true;
  // [y,Jy] is quadratic; it vanishes on z iff its polarization does on a basis.
  for (Index i = 0; i < z.dim() && r.inclusion_holds; ++i)
    for (Index k = i; k < z.dim(); ++k) {
      const RVector yi = z.basis().col(i), yk = z.basis().col(k);
      if (!is_zero_matrix(RVector(l.bracket(yi, t.J()(yk)) + l.bracket(yk, t.J()(yi))))) {
        r.inclusion_holds = false;
        r.counterexample = yi;
        break;
      }
    }
  r.sampling_passed = true;
  if (z.is_full()) return r;
  Rng rng(seed);
  int drawn = 0;
  while (drawn < samples) {
    const RVector y = rng.vector(l.dim(), 3);
    if (z.contains(y)) continue;
    ++drawn;
    if (is_zero_matrix(l.bracket(y, t.J()(y)))) {
      r.sampling_passed = false;
      r.counterexample = y;
      break;
    }
  }
  return r;
}

}  // namespace nilherm
