// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef NAKAYAMA_EXACT_LINALG_HPP
#define NAKAYAMA_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nakayama {

/// Exact rational scalar. GMP keeps every value canonical (reduced, positive
/// denominator) after each arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;

  /// Copy of the block starting at (row, col).
  Matrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, const Vector& v);

/// Kronecker product a (x) b.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Result of reducing a matrix to reduced row echelon form.
struct RowReduction {
  std::vector<std::size_t> pivot_columns;
  /// rank x cols, pivot entries equal to one, zero elsewhere in pivot columns.
  Matrix reduced;
};

RowReduction row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the null space. Vector `v` has entry 1 at its free column and
/// zero at every other free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m * x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

bool is_invertible(const Matrix& m);

/// Basis of the column space expressed as columns of `m` (pivot columns).
std::vector<std::size_t> column_space_pivots(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace nakayama

#endif  // NAKAYAMA_EXACT_LINALG_HPP
