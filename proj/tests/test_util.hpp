#pragma once

#include <initializer_list>

#include "nilherm/dense.hpp"

namespace nilherm::testing {

inline RVector rv(std::initializer_list<long> xs) {
  RVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

inline RMatrix rm(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

inline RMatrix eye(Index n) { return RMatrix::Identity(n, n); }

// Standard J on R^{2n}: e_{2i} -> e_{2i+1}.
inline RMatrix standard_j(Index n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    j(2 * i + 1, 2 * i) = 1;
    j(2 * i, 2 * i + 1) = -1;
  }
  return j;
}

}  // namespace nilherm::testing
