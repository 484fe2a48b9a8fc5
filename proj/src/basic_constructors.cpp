#include "nilherm/basic_constructors.hpp"

#include <array>

#include "nilherm/salamon.hpp"

namespace nilherm {

LieAlgebra heisenberg(Index m) {
  if (m < 1) throw PreconditionError("m>=1", "Heisenberg algebra needs m >= 1");
  const Index n = 2 * m + 1;
  std::vector<BracketEntry> b;
  for (Index i = 0; i < m; ++i) b.push_back({i, m + i, unit_vector<Rational>(n, 2 * m)});
  return LieAlgebra(n, b, "h" + std::to_string(n));
}

Index wedge_index(Index r, Index i, Index j) {
  // r + number of pairs preceding (i, j)
  return r + i * (2 * r - i - 1) / 2 + (j - i - 1);
}

LieAlgebra free_two_step(Index r) {
  if (r < 2) throw PreconditionError("r>=2", "free 2-step algebra needs rank >= 2");
  const Index n = r + r * (r - 1) / 2;
  std::vector<BracketEntry> b;
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j) b.push_back({i, j, unit_vector<Rational>(n, wedge_index(r, i, j))});
  return LieAlgebra(n, b, "f" + std::to_string(r));
}

ComplexStructure complex_structure_from_pairs(const std::vector<std::pair<RVector, RVector>>& pairs) {
  const Index k = static_cast<Index>(pairs.size());
  if (k == 0) return ComplexStructure(RMatrix(0, 0));
  const Index n = pairs.front().first.size();
  if (n != 2 * k) throw PreconditionError("pairs", "pairs do not match the dimension");
  RMatrix p(n, n);
  for (Index i = 0; i < k; ++i) {
    p.col(i) = pairs[static_cast<std::size_t>(i)].first;
    p.col(k + i) = pairs[static_cast<std::size_t>(i)].second;
  }
  RMatrix std_j = RMatrix::Zero(n, n);
  for (Index i = 0; i < k; ++i) {
    std_j(k + i, i) = 1;
    std_j(i, k + i) = -1;
  }
  return ComplexStructure(RMatrix(p * std_j * inverse(p)));
}

AlgebraWithJ free_complex_structure(Index r) {
  if (r < 2) throw PreconditionError("r>=2", "free 2-step algebra needs rank >= 2");
  const Index mod = r % 4;
  const bool padded = mod == 1 || mod == 2;
  const bool has_v0 = mod == 1 || mod == 3;
  const Index half = (r - (has_v0 ? 1 : 0)) / 2;  // number of v_i with i >= 1
  const Index shift = padded ? 1 : 0;
  const Index n = shift + r + r * (r - 1) / 2;
  // Positions in V (zero-based), before the optional w0 shift.
  auto v = [&](Index i) { return has_v0 ? i : i - 1; };  // v_0 only when has_v0
  auto w = [&](Index i) { return (has_v0 ? 1 : 0) + half + (i - 1); };
  auto e = [&](Index pos) { return unit_vector<Rational>(n, shift + pos); };
  auto wedge = [&](Index a, Index b) -> RVector {
    if (a < b) return unit_vector<Rational>(n, shift + wedge_index(r, a, b));
    return -unit_vector<Rational>(n, shift + wedge_index(r, b, a));
  };
  std::vector<std::pair<RVector, RVector>> pairs;
  for (Index i = 1; i <= half; ++i) pairs.emplace_back(e(v(i)), e(w(i)));
  for (Index i = 1; i <= half; ++i)
    for (Index j = i + 1; j <= half; ++j) {
      const RVector alpha_p = wedge(w(i), v(j)) + wedge(v(i), w(j));
      const RVector alpha_m = wedge(w(i), v(j)) - wedge(v(i), w(j));
      const RVector beta_p = wedge(w(i), w(j)) + wedge(v(i), v(j));
      const RVector beta_m = wedge(w(i), w(j)) - wedge(v(i), v(j));
      pairs.emplace_back(alpha_p, beta_m);
      pairs.emplace_back(alpha_m, beta_p);
    }
  auto gamma = [&](Index i) { return wedge(v(i), w(i)); };
  if (has_v0)
    for (Index i = 1; i <= half; ++i) pairs.emplace_back(wedge(v(0), v(i)), wedge(v(0), w(i)));
  const RVector w0 = unit_vector<Rational>(n, 0);
  switch (mod) {
    case 0:
      for (Index i = 1; 2 * i <= half; ++i) pairs.emplace_back(gamma(2 * i - 1), gamma(2 * i));
      break;
    case 3:
      pairs.emplace_back(e(v(0)), gamma(half));
      for (Index i = 1; 2 * i < half; ++i) pairs.emplace_back(gamma(2 * i - 1), gamma(2 * i));
      break;
    case 1:
      pairs.emplace_back(e(v(0)), w0);
      for (Index i = 1; 2 * i <= half; ++i) pairs.emplace_back(gamma(2 * i - 1), gamma(2 * i));
      break;
    case 2:
      for (Index i = 1; 2 * i < half; ++i) pairs.emplace_back(gamma(2 * i - 1), gamma(2 * i));
      pairs.emplace_back(gamma(half), w0);
      break;
  }
  LieAlgebra f = free_two_step(r);
  if (padded) f = direct_sum(LieAlgebra::abelian(1), f);
  f.set_name(padded ? "R+f" + std::to_string(r) : "f" + std::to_string(r));
  return {f, complex_structure_from_pairs(pairs)};
}

MetricComplexTriple standard_abelian_triple(Index k, Index m) {
  LieAlgebra l = direct_sum(LieAlgebra::abelian(2 * k + 1), heisenberg(m));
  l.set_name("R" + std::to_string(2 * k + 1) + "+h" + std::to_string(2 * m + 1));
  const Index n = l.dim();
  const Index off = 2 * k + 1;
  std::vector<std::pair<RVector, RVector>> pairs;
  for (Index i = 0; i < m; ++i) pairs.emplace_back(unit_vector<Rational>(n, off + i), unit_vector<Rational>(n, off + m + i));
  pairs.emplace_back(unit_vector<Rational>(n, n - 1), unit_vector<Rational>(n, 0));
  for (Index i = 0; i < k; ++i) pairs.emplace_back(unit_vector<Rational>(n, 1 + 2 * i), unit_vector<Rational>(n, 2 + 2 * i));
  return MetricComplexTriple(l, complex_structure_from_pairs(pairs), RMatrix::Identity(n, n));
}

namespace {
const std::array<std::string, 7> kSixDimSalamon = {"(0,0,0,12,13,23)", "(0,0,0,0,13-24,14+23)", "(0,0,0,0,12,14+23)",
                                            "(0,0,0,0,12,34)",  "(0,0,0,0,12,13)",       "(0,0,0,0,0,12+34)",
                                            "(0,0,0,0,0,12)"};
const std::array<std::string, 7> kSixDimNames = {"f3",       "h3(C)",     "h3xR3", "h3+h3",
                                                 "RxR5",     "R+h5",      "R3+h3"};

void check_row(int row) {
  if (row < 1 || row > 7) throw PreconditionError("table1-row", "row must be between 1 and 7");
}
}  // namespace

const std::string& table1_salamon(int row) {
  check_row(row);
  return kSixDimSalamon[static_cast<std::size_t>(row - 1)];
}

const std::string& table1_name(int row) {
  check_row(row);
  return kSixDimNames[static_cast<std::size_t>(row - 1)];
}

LieAlgebra table1_algebra(int row) { return parse_salamon(table1_salamon(row), 6, table1_name(row)); }

}  // namespace nilherm
