#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "funobs/rational.hpp"

namespace funobs {

// Dense row-major matrix over the rationals. Zero rows or zero columns are
// valid shapes; an m = 0 plant has B with no columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Rational>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& k, const Matrix& a);
  Matrix operator-() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// [a b]; row counts must agree.
Matrix hcat(const Matrix& a, const Matrix& b);
// [a; b]; column counts must agree.
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::size_t k);

struct RowEchelon {
  Matrix reduced;                  // reduced row echelon form, pivots equal to 1
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace funobs
