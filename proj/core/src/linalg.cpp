#include "lpi/linalg.hpp"

#include "lpi/error.hpp"

namespace lpi {

DenseMatrix::DenseMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(ring)) {}

DenseMatrix DenseMatrix::identity(const Ring& ring, std::size_t n) {
  DenseMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
  return m;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols_ != y.rows_) throw Error(ErrorKind::InvalidArgument, "matrix shapes do not compose");
  DenseMatrix out(x.ring_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

std::vector<std::size_t> row_reduce(DenseMatrix& m) {
  if (!m.ring().is_field()) throw Error(ErrorKind::NotInvertible, "row reduction needs a field");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Scalar inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(DenseMatrix m) { return row_reduce(m).size(); }

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix aug(m.ring(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.ring());
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  DenseMatrix out(m.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::optional<std::vector<Scalar>> solve(const DenseMatrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
  DenseMatrix aug(m.ring(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.ring()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& m) {
  DenseMatrix reduced = m;
  const auto pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.ring()));
    v[free] = Scalar::one(m.ring());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lpi
