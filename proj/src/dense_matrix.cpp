#include "poincare/dense_matrix.hpp"

#include <stdexcept>
#include <string>

namespace poincare {

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::size_t DenseMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.is_zero() ? 0 : 1;
  return n;
}

std::optional<std::pair<std::size_t, std::size_t>> DenseMatrix::first_nonzero() const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!entries_[k].is_zero()) return std::make_pair(k / cols_, k % cols_);
  }
  return std::nullopt;
}

DenseMatrix DenseMatrix::conj_transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

DenseMatrix DenseMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                               std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("block outside matrix");
  DenseMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
  }
  return out;
}

void DenseMatrix::set_block(std::size_t row0, std::size_t col0, const DenseMatrix& src) {
  if (row0 + src.rows_ > rows_ || col0 + src.cols_ > cols_) throw std::out_of_range("block outside matrix");
  for (std::size_t r = 0; r < src.rows_; ++r) {
    for (std::size_t c = 0; c < src.cols_; ++c) (*this)(row0 + r, col0 + c) = src(r, c);
  }
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
  require_same_shape(*this, rhs, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!rhs.entries_[k].is_zero()) entries_[k] += rhs.entries_[k];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
  require_same_shape(*this, rhs, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!rhs.entries_[k].is_zero()) entries_[k] -= rhs.entries_[k];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(const RadicalScalar& s) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e *= s;
  }
  return *this;
}

DenseMatrix DenseMatrix::operator-() const {
  DenseMatrix out = *this;
  for (auto& e : out.entries_) {
    if (!e.is_zero()) e = -e;
  }
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("multiply: inner dimensions " + std::to_string(a.cols_) + " and " +
                                std::to_string(b.rows_) + " differ");
  }
  // Nonzero column positions of each row of b.
  std::vector<std::vector<std::size_t>> b_support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (!b(k, j).is_zero()) b_support[k].push_back(j);
    }
  }
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RadicalScalar& lhs = a(i, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j : b_support[k]) out(i, j) += lhs * b(k, j);
    }
  }
  return out;
}

DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

}  // namespace poincare
