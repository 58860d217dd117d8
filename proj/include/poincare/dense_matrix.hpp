#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "poincare/radical_scalar.hpp"

namespace poincare {

/// Row-major matrix of exact scalars. Products skip zero entries, so the
/// cost tracks the number of nonzeros of the (very sparse) operands.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zero(std::size_t n) { return DenseMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  RadicalScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const RadicalScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  /// Row-major first nonzero entry, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  DenseMatrix conj_transpose() const;
  DenseMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row0, std::size_t col0, const DenseMatrix& src);

  DenseMatrix& operator+=(const DenseMatrix& rhs);
  DenseMatrix& operator-=(const DenseMatrix& rhs);
  DenseMatrix& operator*=(const RadicalScalar& s);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const RadicalScalar& s, DenseMatrix m) { return m *= s; }
  DenseMatrix operator-() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RadicalScalar> entries_;
};

/// Block-diagonal matrix diag(a, b).
DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace poincare
