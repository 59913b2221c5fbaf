#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "pmb/rational.hpp"

namespace pmb {

/// Dense row-major matrix over the rationals. Zero-row and zero-column
/// matrices are legal and stand for maps into or out of the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Convenience for literals; every row must have the same length. An empty
  /// list yields the 0x0 matrix.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// Builds a `rows` x columns.size() matrix whose columns are the given vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> entries() const noexcept { return data_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(data_).subspan(r * cols_, cols_);
  }
  Vector column(std::size_t c) const;

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix identity(std::size_t n);

/// A * B; throws ShapeMismatch unless a.cols() == b.rows().
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// [A | B]; throws ShapeMismatch unless the row counts agree.
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Columns `first` .. `first + count - 1` of `a`.
Matrix column_block(const Matrix& a, std::size_t first, std::size_t count);

/// A * v for a column vector v.
Vector mat_vec(const Matrix& a, std::span<const Rational> v);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace pmb
