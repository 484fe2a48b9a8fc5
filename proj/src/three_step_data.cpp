#include "nilherm/three_step_data.hpp"

namespace nilherm {

namespace {

RMatrix standard_complex(Index n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    j(k + n, k) = 1;
    j(k, k + n) = -1;
  }
  return j;
}

RMatrix direct_sum_matrix(const std::vector<const RMatrix*>& blocks) {
  Index n = 0;
  for (const auto* b : blocks) n += b->rows();
  RMatrix out = RMatrix::Zero(n, n);
  Index at = 0;
  for (const auto* b : blocks) {
    out.block(at, at, b->rows(), b->cols()) = *b;
    at += b->rows();
  }
  return out;
}

Subspace unit_span(Index n, Index from, Index count) {
  RMatrix m = RMatrix::Zero(n, count);
  for (Index i = 0; i < count; ++i) m(from + i, i) = 1;
  return Subspace::span(m);
}

// Accumulates forms[s](a, c) e_{offset + s} into the value of [v_a, v_c].
void add_form_brackets(const std::vector<RMatrix>& forms, Index offset, Index dim_v,
                       std::vector<RVector>& values, Index dim) {
  for (Index a = 0; a < dim_v; ++a)
    for (Index c = a + 1; c < dim_v; ++c) {
      RVector& w = values[static_cast<std::size_t>(a * dim_v + c)];
      if (w.size() == 0) w = RVector::Zero(dim);
      for (std::size_t s = 0; s < forms.size(); ++s) w(offset + static_cast<Index>(s)) += forms[s](a, c);
    }
}

std::vector<BracketEntry> collect(const std::vector<RVector>& values, Index v_at, Index dim_v) {
  std::vector<BracketEntry> out;
  for (Index a = 0; a < dim_v; ++a)
    for (Index c = a + 1; c < dim_v; ++c) {
      const RVector& w = values[static_cast<std::size_t>(a * dim_v + c)];
      if (w.size() > 0 && !is_zero_matrix(w)) out.push_back({v_at + a, v_at + c, w});
    }
  return out;
}

ComplexStructure full_structure(const Complex3StepData& d) {
  return ComplexStructure(direct_sum_matrix({&d.j1, &d.j0, &d.jv}));
}

}  // namespace

bool Complex3StepData::operator==(const Complex3StepData& o) const {
  return dim_v == o.dim_v && dim_q == o.dim_q && dim_z1 == o.dim_z1 && dim_z2 == o.dim_z2 &&
         dim_u == o.dim_u && jv == o.jv && j0 == o.j0 && j1 == o.j1 && alpha == o.alpha && mu == o.mu &&
         rho == o.rho && gram == o.gram;
}

LieAlgebra alpha_algebra(const Complex3StepData& d) {
  const Index n = d.dim_q + d.dim_v;
  std::vector<RVector> values(static_cast<std::size_t>(d.dim_v * d.dim_v));
  add_form_brackets(d.alpha, 0, d.dim_v, values, n);
  return LieAlgebra(n, collect(values, d.dim_q, d.dim_v), "alpha");
}

LieAlgebra mu_algebra(const Complex3StepData& d) {
  const Index n = d.dim_h() + d.dim_v;
  std::vector<RVector> values(static_cast<std::size_t>(d.dim_v * d.dim_v));
  add_form_brackets(d.mu, 0, d.dim_v, values, n);
  return LieAlgebra(n, collect(values, d.dim_h(), d.dim_v), "mu");
}

std::vector<Violation> validate_3step_data(const Complex3StepData& d) {
  std::vector<Violation> out;
  auto fail = [&](const char* clause, const std::string& what) { out.push_back({clause, what}); };
  const Index dv = d.dim_v, dq = d.dim_q, d1 = d.dim_z1, dh = d.dim_h();
  bool ok = dv >= 0 && dq >= 0 && d1 >= 0 && d.dim_z2 >= 0 && d.dim_u >= 0 && d.jv.rows() == dv &&
            d.jv.cols() == dv && d.j0.rows() == dq && d.j0.cols() == dq && d.j1.rows() == dh &&
            d.j1.cols() == dh && static_cast<Index>(d.alpha.size()) == dq &&
            static_cast<Index>(d.mu.size()) == d1 && static_cast<Index>(d.rho.size()) == d.dim_u &&
            d.gram.rows() == d.dim() && d.gram.cols() == d.dim();
  for (const auto& f : d.alpha) ok = ok && f.rows() == dv && f.cols() == dv && is_skew(f);
  for (const auto& f : d.mu) ok = ok && f.rows() == dv && f.cols() == dv && is_skew(f);
  for (const auto& r : d.rho) ok = ok && r.rows() == dq && r.cols() == dv;
  if (!ok) {
    fail("shape", "component sizes are inconsistent or a form is not skew");
    return out;
  }
  if (d.dim_u == 0) fail("shape", "u must be nonzero");
  if (d.dim_z2 + d.dim_u != d1) fail("shape", "J1 z1 = z2 + u needs dim z2 + dim u = dim z1");
  if (!is_complex_structure(d.jv) || !is_complex_structure(d.j0) || !is_complex_structure(d.j1))
    fail("shape", "Jv, J0 and J1 must square to -I");
  if (d1 > 0 && !is_zero_matrix(RMatrix(d.j1.topLeftCorner(d1, d1))))
    fail("shape", "J1 does not map z1 into z2 + u");
  if (!out.empty()) return out;

  if (!is_positive_definite(d.gram)) fail("metric", "Gram matrix is not positive definite");
  else if (!is_hermitian(full_structure(d), d.gram)) fail("metric", "metric is not J-Hermitian");

  // (i)
  {
    RMatrix stack(dq * dv, d.dim_u);
    for (Index i = 0; i < d.dim_u; ++i)
      stack.col(i) = Eigen::Map<const RVector>(d.rho[static_cast<std::size_t>(i)].data(), dq * dv);
    if (rank(stack) != d.dim_u) fail("(i)", "rho is not injective");
    for (const auto& r : d.rho)
      if (RMatrix(d.j0 * r) != RMatrix(r * d.jv)) {
        fail("(i)", "rho(u) is not complex linear");
        break;
      }
  }
  // (ii)
  {
    const LieAlgebra n0 = alpha_algebra(d);
    const ComplexStructure j(direct_sum_matrix({&d.j0, &d.jv}));
    if (!is_integrable(n0, j)) fail("(ii)", "J0 + Jv is not integrable on (q + v, alpha)");
    else {
      const auto step = j_nilpotent_step(n0, j);
      if (!step || *step > 2) fail("(ii)", "J0 + Jv is not of step at most 2");
    }
  }
  // (iii)
  {
    bool mu_zero = true;
    for (const auto& f : d.mu) mu_zero = mu_zero && is_zero_matrix(f);
    if (mu_zero) fail("(iii)", "mu vanishes");
    const LieAlgebra n1 = mu_algebra(d);
    const ComplexStructure j(direct_sum_matrix({&d.j1, &d.jv}));
    if (!is_abelian_structure(n1, j)) fail("(iii)", "J1 + Jv is not abelian on (h + v, mu)");
  }
  return out;
}

SurjectivityReport surjectivity_conditions(const Complex3StepData& d) {
  const Index dv = d.dim_v, dq = d.dim_q, d1 = d.dim_z1;
  const Index pairs = dv * (dv - 1) / 2;
  RMatrix a(dq, pairs), m(d1, pairs);
  Index p = 0;
  for (Index x = 0; x < dv; ++x)
    for (Index y = x + 1; y < dv; ++y, ++p) {
      for (Index s = 0; s < dq; ++s) a(s, p) = d.alpha[static_cast<std::size_t>(s)](x, y);
      for (Index t = 0; t < d1; ++t) m(t, p) = d.mu[static_cast<std::size_t>(t)](x, y);
    }
  RMatrix images(dq, d.dim_u * dv);
  for (Index i = 0; i < d.dim_u; ++i) images.middleCols(i * dv, dv) = d.rho[static_cast<std::size_t>(i)];
  const Subspace r = Subspace::span(images);
  SurjectivityReport out;
  out.z1_reached = image(m, preimage(a, r)).is_full();
  out.q_reached = sum(image(a, kernel(m)), r).is_full();
  return out;
}

MetricComplexTriple build_from_3step_data(const Complex3StepData& d) {
  const auto violations = validate_3step_data(d);
  if (!violations.empty()) throw SemanticError(violations.front().clause, violations.front().detail);
  const Index n = d.dim(), dh = d.dim_h(), dv = d.dim_v;
  const Index oq = dh, ov = dh + d.dim_q, ou = d.dim_z1 + d.dim_z2;
  std::vector<RVector> values(static_cast<std::size_t>(dv * dv));
  add_form_brackets(d.alpha, oq, dv, values, n);
  add_form_brackets(d.mu, 0, dv, values, n);
  std::vector<BracketEntry> entries = collect(values, ov, dv);
  for (Index i = 0; i < d.dim_u; ++i)
    for (Index a = 0; a < dv; ++a) {
      RVector w = RVector::Zero(n);
      w.segment(oq, d.dim_q) = d.rho[static_cast<std::size_t>(i)].col(a);
      if (!is_zero_matrix(w)) entries.push_back({ou + i, ov + a, w});
    }
  MetricComplexTriple t(LieAlgebra(n, entries, "3-step data"), full_structure(d), d.gram);
  auto post = [](bool ok, const char* what) {
    if (!ok) throw SemanticError("postcondition", what);
  };
  post(is_integrable(t.algebra(), t.J()), "assembled J is not integrable");
  post(j_nilpotent_step(t.algebra(), t.J()) == 3, "assembled J is not 3-step");
  if (surjectivity_conditions(d).holds()) {
    RMatrix cols = RMatrix::Zero(n, d.dim_z1 + d.dim_q);
    for (Index i = 0; i < d.dim_z1; ++i) cols(i, i) = 1;
    for (Index i = 0; i < d.dim_q; ++i) cols(oq + i, d.dim_z1 + i) = 1;
    post(commutator_ideal(t.algebra()) == Subspace::span(cols), "n' differs from z1 + q");
    post(j_invariant_commutator(t.algebra(), t.J()) == unit_span(n, oq, d.dim_q), "n'_J differs from q");
  }
  return t;
}

ThreeStepExtraction extract_3step_data(const MetricComplexTriple& t) {
  const auto& l = t.algebra();
  const auto& j = t.J();
  const RMatrix& g = t.gram();
  if (!is_two_step(l)) throw PreconditionError("2-step", "algebra is not 2-step nilpotent");
  if (!is_integrable(l, j)) throw PreconditionError("integrable", "J is not integrable");
  if (j_nilpotent_step(l, j) != 3) throw PreconditionError("step", "J is not 3-step");

  const Subspace d = commutator_ideal(l);
  const Subspace nj = intersection(d, j.apply(d));
  const Subspace z1 = intersection(d, orthogonal_complement(nj, g));
  const Subspace jz1 = j.apply(z1);
  const Subspace z2 = intersection(jz1, center(l));
  const Subspace u = intersection(jz1, orthogonal_complement(z2, g));
  const Subspace v = orthogonal_complement(sum(d, j.apply(d)), g);
  const Index n = l.dim();
  RMatrix p(n, n);
  p << z1.basis(), z2.basis(), u.basis(), nj.basis(), v.basis();
  const MetricComplexTriple tp = change_basis(t, p);

  Complex3StepData out;
  out.dim_z1 = z1.dim();
  out.dim_z2 = z2.dim();
  out.dim_u = u.dim();
  out.dim_q = nj.dim();
  out.dim_v = v.dim();
  const Index dh = out.dim_h(), dq = out.dim_q, dv = out.dim_v;
  const Index oq = dh, ov = dh + dq, ou = out.dim_z1 + out.dim_z2;
  const RMatrix& jp = tp.J().matrix();
  {
    RMatrix offdiag = jp;
    offdiag.block(0, 0, dh, dh).setZero();
    offdiag.block(oq, oq, dq, dq).setZero();
    offdiag.block(ov, ov, dv, dv).setZero();
    if (!is_zero_matrix(offdiag)) throw SemanticError("shape", "J does not preserve h, q and v");
  }
  out.j1 = jp.block(0, 0, dh, dh);
  out.j0 = jp.block(oq, oq, dq, dq);
  out.jv = jp.block(ov, ov, dv, dv);
  out.gram = tp.gram();
  out.alpha.assign(static_cast<std::size_t>(dq), RMatrix::Zero(dv, dv));
  out.mu.assign(static_cast<std::size_t>(out.dim_z1), RMatrix::Zero(dv, dv));
  out.rho.assign(static_cast<std::size_t>(out.dim_u), RMatrix::Zero(dq, dv));
  const auto& lp = tp.algebra();
  for (const auto& e : lp.brackets()) {
    const bool vv = e.i >= ov && e.j >= ov;
    const bool uv = e.i >= ou && e.i < oq && e.j >= ov;
    if (vv) {
      RVector rest = e.coeffs;
      rest.head(out.dim_z1).setZero();
      rest.segment(oq, dq).setZero();
      if (!is_zero_matrix(rest)) throw SemanticError("shape", "[v, v] leaves z1 + q");
      const Index a = e.i - ov, c = e.j - ov;
      for (Index s = 0; s < dq; ++s) {
        out.alpha[static_cast<std::size_t>(s)](a, c) = e.coeffs(oq + s);
        out.alpha[static_cast<std::size_t>(s)](c, a) = -e.coeffs(oq + s);
      }
      for (Index s = 0; s < out.dim_z1; ++s) {
        out.mu[static_cast<std::size_t>(s)](a, c) = e.coeffs(s);
        out.mu[static_cast<std::size_t>(s)](c, a) = -e.coeffs(s);
      }
    } else if (uv) {
      RVector rest = e.coeffs;
      rest.segment(oq, dq).setZero();
      if (!is_zero_matrix(rest)) throw SemanticError("shape", "[u, v] leaves q");
      out.rho[static_cast<std::size_t>(e.i - ou)].col(e.j - ov) = e.coeffs.segment(oq, dq);
    } else {
      throw SemanticError("shape", "bracket outside [v, v] and [u, v]");
    }
  }
  const auto violations = validate_3step_data(out);
  if (!violations.empty())
    throw SemanticError("extract", "extracted data violates " + violations.front().clause + ": " +
                                       violations.front().detail);
  return {std::move(out), p};
}

Complex3StepData example_3step_data(Index n, std::vector<Rational> a, std::vector<Rational> b, bool with_alpha) {
  if (n < 3) throw PreconditionError("n", "the 3-step family needs n >= 3");
  const Index half = n - 2;
  if (a.empty()) {
    a.assign(static_cast<std::size_t>(half), Rational(0));
    a[0] = 1;
  }
  if (b.empty()) b.assign(static_cast<std::size_t>(half), Rational(0));
  if (static_cast<Index>(a.size()) != half || static_cast<Index>(b.size()) != half)
    throw PreconditionError("rho", "rho(y) needs n - 2 coefficients a_i and b_i");
  Complex3StepData d;
  d.dim_v = 2 * half;
  d.dim_q = 2;
  d.dim_z1 = 1;
  d.dim_z2 = 0;
  d.dim_u = 1;
  d.jv = standard_complex(half);
  d.j0 = standard_complex(1);
  d.j1 = standard_complex(1);
  d.alpha.assign(2, RMatrix::Zero(d.dim_v, d.dim_v));
  if (with_alpha) {
    if (half == 1) {
      d.alpha[0](0, 1) = 1;
      d.alpha[0](1, 0) = -1;
    } else {
      // Ambient order [J x' | x' | v], with f1 = x' and f2 = J x'.
      const MetricComplexTriple t = build_from_2step_data(example_2step_data(TwoStepExample::Mixed, half));
      for (Index p = 0; p < d.dim_v; ++p)
        for (Index q = 0; q < d.dim_v; ++q) {
          const RVector w = t.algebra().bracket(2 + p, 2 + q);
          d.alpha[0](p, q) = w(1);
          d.alpha[1](p, q) = w(0);
        }
    }
  }
  d.mu.assign(1, RMatrix::Zero(d.dim_v, d.dim_v));
  for (Index k = 0; k < half; ++k) {
    d.mu[0](k, k + half) = 1;
    d.mu[0](k + half, k) = -1;
  }
  RMatrix rho(2, d.dim_v);
  for (Index i = 0; i < half; ++i) {
    const auto s = static_cast<std::size_t>(i);
    rho(0, i) = a[s];
    rho(0, half + i) = -b[s];
    rho(1, i) = b[s];
    rho(1, half + i) = a[s];
  }
  d.rho = {rho};
  d.gram = RMatrix::Identity(d.dim(), d.dim());
  return d;
}

}  // namespace nilherm
