#include "nilherm/hypercomplex.hpp"

#include "nilherm/hermitian.hpp"

namespace nilherm {

std::optional<HypercomplexViolation> validate_hypercomplex(const LieAlgebra& l, const HypercomplexStructure& h) {
  const RMatrix &a = h.j1.matrix(), &b = h.j2.matrix(), &c = h.j3.matrix();
  if (a.rows() != l.dim() || b.rows() != l.dim() || c.rows() != l.dim())
    return HypercomplexViolation{"dimension", std::nullopt};
  if (RMatrix(a * b) != c) return HypercomplexViolation{"J1J2=J3", std::nullopt};
  if (RMatrix(b * a) != RMatrix(-c)) return HypercomplexViolation{"J2J1=-J3", std::nullopt};
  for (int alpha = 0; alpha < 3; ++alpha)
    if (auto w = nijenhuis_witness(l, h[alpha]))
      return HypercomplexViolation{"N_J" + std::to_string(alpha + 1), std::move(w)};
  return std::nullopt;
}

bool is_abelian_hypercomplex(const LieAlgebra& l, const HypercomplexStructure& h) {
  return !validate_hypercomplex(l, h) && is_abelian_structure(l, h.j1) && is_abelian_structure(l, h.j2) &&
         is_abelian_structure(l, h.j3);
}

bool is_hyper_hermitian(const HypercomplexStructure& h, const RMatrix& g) {
  return is_positive_definite(g) && is_hermitian(h.j1, g) && is_hermitian(h.j2, g) && is_hermitian(h.j3, g);
}

std::optional<HktWitness> hkt_violation(const LieAlgebra& l, const HypercomplexStructure& h, const RMatrix& g) {
  if (!is_hyper_hermitian(h, g)) throw PreconditionError("hyper-Hermitian", "metric is not hyper-Hermitian");
  const Index n = l.dim();
  // gjj[alpha][(a,b)] = g [J_alpha e_a, J_alpha e_b]
  std::vector<std::vector<RVector>> gjj(3, std::vector<RVector>(static_cast<std::size_t>(n * n)));
  for (int alpha = 0; alpha < 3; ++alpha) {
    const RMatrix& j = h[alpha].matrix();
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        gjj[alpha][static_cast<std::size_t>(a * n + b)] = g * l.bracket(RVector(j.col(a)), RVector(j.col(b)));
  }
  auto at = [&](int alpha, Index a, Index b, Index c) -> const Rational& {
    return gjj[alpha][static_cast<std::size_t>(a * n + b)](c);
  };
  // Each cyclic sum is alternating, so increasing triples suffice.
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        HktWitness w{i, j, k, {}};
        for (int alpha = 0; alpha < 3; ++alpha) w.values[alpha] = at(alpha, i, j, k) + at(alpha, j, k, i) + at(alpha, k, i, j);
        if (w.values[0] != w.values[1] || w.values[1] != w.values[2]) return w;
      }
  return std::nullopt;
}

bool is_hkt(const LieAlgebra& l, const HypercomplexStructure& h, const RMatrix& g) { return !hkt_violation(l, h, g); }

}  // namespace nilherm
