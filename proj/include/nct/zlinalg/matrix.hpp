#pragma once

#include "nct/error.hpp"
#include "nct/exact/integer.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nct {

/// Dense row-major matrix over an exact ring. Dimensions are at least 1x1.
template <class T>
class Matrix {
 public:
  Matrix() : Matrix(1, 1) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be >= 1");
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be >= 1");
    if (data_.size() != rows * cols) throw DomainError("entry count does not match dimensions");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw DomainError("matrix dimensions must be >= 1");
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& entries() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    require_square("trace");
    T t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix product dimension mismatch");
    Matrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += xik * y(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += y.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    x.require_same_shape(y);
    Matrix out = x;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= y.data_[i];
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix out = x;
    for (auto& v : out.data_) v = s * v;
    return out;
  }
  Matrix operator-() const { return T(-1) * *this; }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  Matrix pow(unsigned long exponent) const {
    require_square("pow");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (exponent > 0) {
      if (exponent & 1UL) result = result * base;
      exponent >>= 1;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  void require_square(const char* what) const {
    if (!is_square()) throw DomainError(std::string(what) + " needs a square matrix");
  }

 private:
  void require_same_shape(const Matrix& y) const {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Inverse over a field (Rational, QuadInt) by Gauss-Jordan elimination.
/// Throws DomainError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  m.require_square("inverse");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == T(0)) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    a.swap_rows(pivot, col);
    inv.swap_rows(pivot, col);
    const T scale = T(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == T(0)) continue;
      const T f = -a(r, col);
      a.add_row_multiple(r, col, f);
      inv.add_row_multiple(r, col, f);
    }
  }
  return inv;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Determinant by fraction-free Bareiss elimination.
Integer det(const IntMatrix& m);

/// Matrix grammar: rows separated by `;`, entries by `,` ("1,1;2,1").
IntMatrix parse_matrix(std::string_view text);
std::string to_string(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace nct
