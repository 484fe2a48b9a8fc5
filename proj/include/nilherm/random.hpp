#pragma once

#include <cstdint>
#include <random>

#include "nilherm/dense.hpp"

namespace nilherm {

// Deterministic small-integer generator. The distribution is computed by hand
// from mt19937_64 output so values agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1u) != 0; }
  Rational small(std::int64_t bound) { return Rational(uniform(-bound, bound)); }

  RMatrix matrix(Index rows, Index cols, std::int64_t bound) {
    RMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = small(bound);
    return m;
  }
  RVector vector(Index n, std::int64_t bound) { return matrix(n, 1, bound).col(0); }

  // Unimodular-ish invertible matrix: random unit triangular factors.
  RMatrix invertible(Index n, std::int64_t bound) {
    RMatrix l = RMatrix::Identity(n, n), u = RMatrix::Identity(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < i; ++j) {
        l(i, j) = small(bound);
        u(j, i) = small(bound);
      }
    return l * u;
  }
  // B^T B + I for a random B: symmetric positive definite.
  RMatrix positive_definite(Index n, std::int64_t bound) {
    const RMatrix b = matrix(n, n, bound);
    return RMatrix(b.transpose() * b) + RMatrix::Identity(n, n);
  }
  RMatrix skew(Index n, std::int64_t bound) {
    RMatrix m = RMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        m(i, j) = small(bound);
        m(j, i) = -m(i, j);
      }
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nilherm
