#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <optional>
#include <vector>

#include "nilherm/error.hpp"
#include "nilherm/rational.hpp"

namespace nilherm {

using Index = Eigen::Index;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Scalar>
Vector<Scalar> unit_vector(Index n, Index k) {
  Vector<Scalar> v = Vector<Scalar>::Zero(n);
  v(k) = Scalar(1);
  return v;
}

// Reduced row echelon form built one row at a time. Pivots are the leftmost
// nonzero entries, scaled to 1, and every pivot column is cleared in all other
// rows, so the result is the unique RREF of the rows added so far.
template <typename Scalar>
class RowEchelon {
 public:
  explicit RowEchelon(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Index>& pivots() const { return pivots_; }
  const Vector<Scalar>& row(Index i) const { return rows_[static_cast<std::size_t>(i)]; }

  // Remainder of v after elimination against the stored pivots.
  Vector<Scalar> reduce(Vector<Scalar> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Index p = pivots_[r];
      if (is_zero(v(p))) continue;
      const Scalar c = v(p);
      const Vector<Scalar>& row = rows_[r];
      for (Index j = p; j < cols_; ++j)
        if (!is_zero(row(j))) v(j) -= c * row(j);
    }
    return v;
  }

  // Returns true when the rank grew.
  template <typename Derived>
  bool add_row(const Eigen::MatrixBase<Derived>& input) {
    Vector<Scalar> v = reduce(Vector<Scalar>(input));
    Index p = 0;
    while (p < cols_ && is_zero(v(p))) ++p;
    if (p == cols_) return false;
    const Scalar inv = Scalar(1) / v(p);
    for (Index j = p; j < cols_; ++j)
      if (!is_zero(v(j))) v(j) *= inv;
    for (auto& row : rows_) {
      if (is_zero(row(p))) continue;
      const Scalar c = row(p);
      for (Index j = p; j < cols_; ++j)
        if (!is_zero(v(j))) row(j) -= c * v(j);
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  template <typename Derived>
  void add_rows(const Eigen::MatrixBase<Derived>& m) {
    for (Index i = 0; i < m.rows(); ++i) add_row(m.row(i).transpose());
  }

  Matrix<Scalar> matrix() const {
    Matrix<Scalar> out(rank(), cols_);
    for (Index i = 0; i < rank(); ++i) out.row(i) = row(i).transpose();
    return out;
  }

  // Null space basis: one column per free column f, e_f - sum_i R(i,f) e_{p_i}.
  Matrix<Scalar> kernel() const {
    std::vector<Index> free_cols;
    std::size_t r = 0;
    for (Index j = 0; j < cols_; ++j) {
      if (r < pivots_.size() && pivots_[r] == j) {
        ++r;
      } else {
        free_cols.push_back(j);
      }
    }
    Matrix<Scalar> k = Matrix<Scalar>::Zero(cols_, static_cast<Index>(free_cols.size()));
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      const Index f = free_cols[c];
      k(f, static_cast<Index>(c)) = Scalar(1);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        k(pivots_[i], static_cast<Index>(c)) = -rows_[i](f);
    }
    return k;
  }

 private:
  Index cols_;
  std::vector<Vector<Scalar>> rows_;
  std::vector<Index> pivots_;
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& m) {
  RowEchelon<typename Derived::Scalar> e(m.cols());
  e.add_rows(m);
  return e;
}

template <typename Derived>
Matrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).matrix();
}

template <typename Scalar>
struct RankKernel {
  Index rank;
  Matrix<Scalar> kernel;
};

template <typename Derived>
RankKernel<typename Derived::Scalar> rank_and_kernel(const Eigen::MatrixBase<Derived>& m) {
  const auto e = row_echelon(m);
  return {e.rank(), e.kernel()};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

// Some X with A X = B, or nothing when the system is inconsistent.
template <typename Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto e = row_echelon(aug);
  Matrix<Scalar> x = Matrix<Scalar>::Zero(a.cols(), b.cols());
  for (Index i = 0; i < e.rank(); ++i) {
    const Index p = e.pivots()[static_cast<std::size_t>(i)];
    if (p >= a.cols()) return std::nullopt;
    x.row(p) = e.row(i).tail(b.cols()).transpose();
  }
  return x;
}

template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw PreconditionError("square", "inverse of a non-square matrix");
  Matrix<Scalar> aug(a.rows(), 2 * a.cols());
  aug << a, Matrix<Scalar>::Identity(a.rows(), a.cols());
  const auto e = row_echelon(aug);
  if (e.rank() < a.rows() || (a.rows() > 0 && e.pivots().back() >= a.cols())) {
    throw SemanticError("singular", "matrix is not invertible");
  }
  Matrix<Scalar> inv(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) inv.row(i) = e.row(i).tail(a.cols()).transpose();
  return inv;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename Derived>
bool is_skew(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

// Symmetric Gaussian elimination without pivoting; the matrix is positive
// definite iff every pivot is positive (leading principal minors).
template <typename Scalar>
bool is_positive_definite(const Matrix<Scalar>& g) {
  if (!is_symmetric(g)) return false;
  Matrix<Scalar> a = g;
  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    if (!(a(k, k) > Scalar(0))) return false;
    for (Index i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Scalar f = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace nilherm
