#include "nilherm/lie_algebra.hpp"

namespace nilherm {

LieAlgebra::LieAlgebra(Index dim, const std::vector<BracketEntry>& brackets, std::string name)
    : dim_(dim), name_(std::move(name)) {
  if (dim < 0) throw SemanticError("dimension", "negative dimension");
  std::vector<RVector> dense(static_cast<std::size_t>(dim * dim), RVector::Zero(dim));
  std::vector<bool> seen(static_cast<std::size_t>(dim * dim), false);
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim)
      throw SemanticError("bracket-index", "bracket index out of range");
    if (b.i == b.j) throw SemanticError("antisymmetry", "bracket [e_i, e_i] given");
    if (b.coeffs.size() != dim) throw SemanticError("bracket-size", "coefficient vector has the wrong length");
    const auto ij = static_cast<std::size_t>(b.i * dim + b.j);
    const auto ji = static_cast<std::size_t>(b.j * dim + b.i);
    if (seen[ij] || seen[ji]) throw SemanticError("duplicate-bracket", "bracket given twice");
    seen[ij] = seen[ji] = true;
    dense[ij] = b.coeffs;
    dense[ji] = -b.coeffs;
  }
  table_.resize(dense.size());
  right_.assign(static_cast<std::size_t>(dim), RMatrix::Zero(dim, dim));
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const RVector& c = dense[static_cast<std::size_t>(i * dim + j)];
      auto& s = table_[static_cast<std::size_t>(i * dim + j)];
      for (Index k = 0; k < dim; ++k) {
        if (is_zero(c(k))) continue;
        s.emplace_back(k, c(k));
      }
      right_[static_cast<std::size_t>(j)].col(i) = c;
    }
  }
  if (auto v = find_jacobi_violation(*this)) {
    throw SemanticError("jacobi", "Jacobi identity fails on (e" + std::to_string(v->i + 1) + ", e" +
                                      std::to_string(v->j + 1) + ", e" + std::to_string(v->k + 1) + ")");
  }
}

LieAlgebra LieAlgebra::abelian(Index dim, std::string name) { return LieAlgebra(dim, {}, std::move(name)); }

RVector LieAlgebra::bracket(Index i, Index j) const {
  RVector out = RVector::Zero(dim_);
  for (const auto& [k, c] : entry(i, j)) out(k) = c;
  return out;
}

void LieAlgebra::accumulate_bracket(const RVector& x, Index k, const Rational& scale, RVector& out) const {
  for (Index a = 0; a < dim_; ++a) {
    if (is_zero(x(a))) continue;
    const Rational s = scale * x(a);
    for (const auto& [m, c] : entry(a, k)) out(m) += s * c;
  }
}

RVector LieAlgebra::bracket(const RVector& x, const RVector& y) const {
  RVector out = RVector::Zero(dim_);
  for (Index k = 0; k < dim_; ++k)
    if (!is_zero(y(k))) accumulate_bracket(x, k, y(k), out);
  return out;
}

RMatrix LieAlgebra::ad(const RVector& x) const {
  RMatrix m(dim_, dim_);
  for (Index k = 0; k < dim_; ++k) {
    RVector col = RVector::Zero(dim_);
    accumulate_bracket(x, k, Rational(1), col);
    m.col(k) = col;
  }
  return m;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = i + 1; j < dim_; ++j)
      if (!entry(i, j).empty()) out.push_back({i, j, bracket(i, j)});
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& s : table_)
    if (!s.empty()) return false;
  return true;
}

LieAlgebra LieAlgebra::change_basis(const RMatrix& p) const {
  const RMatrix pinv = inverse(p);
  std::vector<BracketEntry> out;
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = i + 1; j < dim_; ++j) {
      RVector c = pinv * bracket(RVector(p.col(i)), RVector(p.col(j)));
      if (!is_zero_matrix(c)) out.push_back({i, j, std::move(c)});
    }
  }
  return LieAlgebra(dim_, out, name_);
}

std::optional<JacobiViolation> find_jacobi_violation(const LieAlgebra& l) {
  const Index n = l.dim();
  std::vector<RVector> basis_brackets(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) basis_brackets[static_cast<std::size_t>(i * n + j)] = l.bracket(i, j);
  auto br = [&](Index i, Index j) -> const RVector& { return basis_brackets[static_cast<std::size_t>(i * n + j)]; };
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        RVector s = l.bracket(br(i, j), unit_vector<Rational>(n, k)) +
                    l.bracket(br(j, k), unit_vector<Rational>(n, i)) +
                    l.bracket(br(k, i), unit_vector<Rational>(n, j));
        if (!is_zero_matrix(s)) return JacobiViolation{i, j, k, s};
      }
    }
  }
  return std::nullopt;
}

Subspace commutator_ideal(const LieAlgebra& l) {
  RowEchelon<Rational> e(l.dim());
  for (const auto& b : l.brackets()) e.add_row(b.coeffs);
  return Subspace::from_echelon(e);
}

Subspace bracket_preimage(const LieAlgebra& l, const Subspace& target) {
  const Index n = l.dim();
  if (target.is_full()) return Subspace::full(n);
  RowEchelon<Rational> e(n);
  if (target.is_zero()) {
    for (Index k = 0; k < n; ++k) e.add_rows(l.right_multiplication(k));
  } else {
    const RMatrix ann = annihilator(target);
    for (Index k = 0; k < n; ++k) e.add_rows(ann * l.right_multiplication(k));
  }
  return Subspace::span(e.kernel());
}

Subspace center(const LieAlgebra& l) { return bracket_preimage(l, Subspace::zero(l.dim())); }

std::vector<Subspace> ascending_central_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::zero(l.dim())};
  while (true) {
    Subspace next = bracket_preimage(l, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::full(l.dim())};
  while (!series.back().is_zero()) {
    RowEchelon<Rational> e(l.dim());
    const RMatrix& b = series.back().basis();
    for (Index k = 0; k < l.dim(); ++k) e.add_rows(RMatrix(l.right_multiplication(k) * b).transpose());
    Subspace next = Subspace::from_echelon(e);
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const LieAlgebra& l) { return ascending_central_series(l).back().is_full(); }

int nilpotency_step(const LieAlgebra& l) {
  const auto series = ascending_central_series(l);
  if (!series.back().is_full()) throw SemanticError("not-nilpotent", "the ascending central series stalls");
  return static_cast<int>(series.size()) - 1;
}

bool is_two_step(const LieAlgebra& l) {
  if (l.is_abelian()) return false;
  return center(l).contains(commutator_ideal(l));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index n = a.dim() + b.dim();
  std::vector<BracketEntry> out;
  for (const auto& e : a.brackets()) {
    RVector c = RVector::Zero(n);
    c.head(a.dim()) = e.coeffs;
    out.push_back({e.i, e.j, c});
  }
  for (const auto& e : b.brackets()) {
    RVector c = RVector::Zero(n);
    c.tail(b.dim()) = e.coeffs;
    out.push_back({e.i + a.dim(), e.j + a.dim(), c});
  }
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
  return LieAlgebra(n, out, name);
}

AlgebraReport analyze_algebra(const LieAlgebra& l) {
  AlgebraReport r;
  r.dim = l.dim();
  r.commutator_dim = commutator_ideal(l).dim();
  r.first_betti = r.dim - r.commutator_dim;
  const auto asc = ascending_central_series(l);
  r.center_dim = asc.size() > 1 ? asc[1].dim() : 0;
  for (const auto& s : asc) r.ascending_series_dims.push_back(s.dim());
  if (asc.back().is_full()) r.step = static_cast<int>(asc.size()) - 1;
  for (const auto& s : lower_central_series(l)) r.lower_series_dims.push_back(s.dim());
  return r;
}

}  // namespace nilherm
