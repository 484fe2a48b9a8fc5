#pragma once

#include <string>

#include "nilherm/dense.hpp"

namespace nilherm {

// Linear subspace of Scalar^n held in canonical form: the basis columns are the
// rows of the RREF of any spanning set, so equal subspaces have equal bases.
template <typename Scalar>
class BasicSubspace {
 public:
  BasicSubspace() = default;

  static BasicSubspace zero(Index n) {
    BasicSubspace s;
    s.ambient_ = n;
    s.basis_ = Matrix<Scalar>(n, 0);
    return s;
  }

  static BasicSubspace full(Index n) { return span(Matrix<Scalar>::Identity(n, n)); }

  template <typename Derived>
  static BasicSubspace span(const Eigen::MatrixBase<Derived>& columns) {
    RowEchelon<Scalar> e(columns.rows());
    for (Index j = 0; j < columns.cols(); ++j) e.add_row(columns.col(j));
    return from_echelon(e);
  }

  static BasicSubspace from_echelon(const RowEchelon<Scalar>& e) {
    BasicSubspace s;
    s.ambient_ = e.cols();
    s.basis_ = e.matrix().transpose();
    s.pivots_ = e.pivots();
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix<Scalar>& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  // Coordinates of v in basis(); empty when v is not in the subspace.
  template <typename Derived>
  std::optional<Vector<Scalar>> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    Vector<Scalar> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    if (Vector<Scalar>(basis_ * c) != Vector<Scalar>(v)) return std::nullopt;
    return c;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return coordinates(v).has_value();
  }

  bool contains(const BasicSubspace& other) const {
    for (Index j = 0; j < other.dim(); ++j)
      if (!contains(other.basis_.col(j))) return false;
    return true;
  }

  bool operator==(const BasicSubspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && basis_ == other.basis_;
  }
  bool operator!=(const BasicSubspace& other) const { return !(*this == other); }

 private:
  Index ambient_ = 0;
  Matrix<Scalar> basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Rational>;

namespace detail {
template <typename Scalar>
void require_same_ambient(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw PreconditionError("ambient", "subspaces live in different ambient spaces");
}
}  // namespace detail

template <typename Scalar>
BasicSubspace<Scalar> kernel(const Matrix<Scalar>& m) {
  return BasicSubspace<Scalar>::span(row_echelon(m).kernel());
}

template <typename Scalar>
BasicSubspace<Scalar> sum(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  detail::require_same_ambient(a, b);
  Matrix<Scalar> cols(a.ambient_dim(), a.dim() + b.dim());
  cols << a.basis(), b.basis();
  return BasicSubspace<Scalar>::span(cols);
}

template <typename Scalar>
BasicSubspace<Scalar> intersection(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  detail::require_same_ambient(a, b);
  Matrix<Scalar> m(a.ambient_dim(), a.dim() + b.dim());
  m << a.basis(), -b.basis();
  const Matrix<Scalar> k = row_echelon(m).kernel();
  return BasicSubspace<Scalar>::span(Matrix<Scalar>(a.basis() * k.topRows(a.dim())));
}

// Rows spanning the linear forms that vanish on a.
template <typename Scalar>
Matrix<Scalar> annihilator(const BasicSubspace<Scalar>& a) {
  if (a.dim() == 0) return Matrix<Scalar>::Identity(a.ambient_dim(), a.ambient_dim());
  return row_echelon(Matrix<Scalar>(a.basis().transpose())).kernel().transpose();
}

// {x : g(x, a) = 0}.
template <typename Scalar>
BasicSubspace<Scalar> orthogonal_complement(const BasicSubspace<Scalar>& a, const Matrix<Scalar>& gram) {
  if (gram.rows() != a.ambient_dim() || gram.cols() != a.ambient_dim())
    throw PreconditionError("gram", "Gram matrix has the wrong size");
  if (a.dim() == 0) return BasicSubspace<Scalar>::full(a.ambient_dim());
  return kernel(Matrix<Scalar>(a.basis().transpose() * gram));
}

template <typename Scalar>
BasicSubspace<Scalar> orthogonal_complement(const BasicSubspace<Scalar>& a) {
  return orthogonal_complement(a, Matrix<Scalar>(Matrix<Scalar>::Identity(a.ambient_dim(), a.ambient_dim())));
}

template <typename Scalar>
BasicSubspace<Scalar> image(const Matrix<Scalar>& m, const BasicSubspace<Scalar>& a) {
  if (m.cols() != a.ambient_dim()) throw PreconditionError("shape", "map and subspace sizes differ");
  return BasicSubspace<Scalar>::span(Matrix<Scalar>(m * a.basis()));
}

// {x : m x in target}.
template <typename Scalar>
BasicSubspace<Scalar> preimage(const Matrix<Scalar>& m, const BasicSubspace<Scalar>& target) {
  if (m.rows() != target.ambient_dim()) throw PreconditionError("shape", "map and subspace sizes differ");
  if (target.is_full()) return BasicSubspace<Scalar>::full(m.cols());
  return kernel(Matrix<Scalar>(annihilator(target) * m));
}

// g-orthogonal projector onto a, as an ambient matrix.
template <typename Scalar>
Matrix<Scalar> orthogonal_projector(const BasicSubspace<Scalar>& a, const Matrix<Scalar>& gram) {
  const Matrix<Scalar>& b = a.basis();
  if (a.dim() == 0) return Matrix<Scalar>::Zero(a.ambient_dim(), a.ambient_dim());
  const Matrix<Scalar> gb = b.transpose() * gram * b;
  return b * inverse(gb) * b.transpose() * gram;
}

template <typename Scalar>
struct SubspaceOps {
  BasicSubspace<Scalar> sum;
  BasicSubspace<Scalar> intersection;
  BasicSubspace<Scalar> complement_of_first;
};

template <typename Scalar>
SubspaceOps<Scalar> subspace_ops(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b,
                                  const Matrix<Scalar>& gram) {
  if (!is_positive_definite(gram))
    throw PreconditionError("gram", "Gram matrix is not symmetric positive definite");
  return {sum(a, b), intersection(a, b), orthogonal_complement(a, gram)};
}

}  // namespace nilherm
