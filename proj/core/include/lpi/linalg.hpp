#pragma once

// Dense exact linear algebra over a field of Scalars (Gaussian elimination).

#include <cstddef>
#include <optional>
#include <vector>

#include "lpi/scalars.hpp"

namespace lpi {

class DenseMatrix {
 public:
  DenseMatrix(const Ring& ring, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(const Ring& ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
  friend bool operator==(const DenseMatrix& x, const DenseMatrix& y);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m);

std::size_t rank(DenseMatrix m);

/// Exact inverse of a square matrix, or nullopt if it is singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

/// Some solution x of m·x = rhs, or nullopt if the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& m, const std::vector<Scalar>& rhs);

/// Basis of {x : m·x = 0}.
std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& m);

}  // namespace lpi
