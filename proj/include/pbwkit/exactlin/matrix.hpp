#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbwkit/exactlin/field.hpp"

namespace pbwkit::exactlin {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a fixed field. Maps act on column vectors, so
/// a map V -> W is stored as a dim W x dim V matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& cols);

  FieldSpec field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldSpec field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
std::string to_string(const Vector& v);

}  // namespace pbwkit::exactlin
