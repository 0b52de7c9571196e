#pragma once

#include <string>
#include <vector>

#include "dparity/integer.hpp"

namespace dparity {

/// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator*=(const Rational& k);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(Matrix a, const Rational& k) { return a *= k; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix power(unsigned e) const;
  Rational determinant() const;
  /// Columns forming a basis of the column space (reduced echelon pivots).
  Matrix column_space_basis() const;
  bool is_symmetric() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace dparity
