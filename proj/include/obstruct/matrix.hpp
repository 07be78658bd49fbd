#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "obstruct/ring.hpp"

namespace obstruct {

/// Dense matrix over a Ring. Zero-row and zero-column shapes are valid and
/// stand for maps to or from the zero module.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Row-major literal; every row must have the same length. `cols` is used
  /// when `rows` is empty.
  Matrix(Ring ring, std::initializer_list<std::initializer_list<long>> rows,
         std::size_t cols = 0);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) {
    return Matrix(std::move(ring), rows, cols);
  }
  static Matrix column(Ring ring, const std::vector<Scalar>& entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores the ring-normalized value.
  void set(std::size_t r, std::size_t c, const Scalar& value);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& factor) const;
  Matrix transposed() const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Writes `m` with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& m);

  std::vector<Scalar> column_entries(std::size_t c) const;

  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  // Row/column operations used by elimination routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Scalar& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Scalar& factor);
  void scale_row(std::size_t i, const Scalar& factor);
  void scale_col(std::size_t j, const Scalar& factor);

 private:
  void require_same_shape(const Matrix& other, const char* op) const;

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

std::vector<Scalar> multiply(const Matrix& a, const std::vector<Scalar>& x);

}  // namespace obstruct
