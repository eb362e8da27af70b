#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "funobs/polymatrix.hpp"
#include "funobs/polynomial.hpp"

namespace funobs {

// Reduced rational function num/den: coprime, den monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_proper() const noexcept { return num_.degree() <= den_.degree(); }
  std::complex<double> eval(std::complex<double> s) const { return num_.eval(s) / den_.eval(s); }
  std::string to_string(const std::string& var = "s") const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

 private:
  Polynomial num_;
  Polynomial den_;
};

class RationalFunctionMatrix {
 public:
  RationalFunctionMatrix() = default;
  RationalFunctionMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalFunctionMatrix(const PolyMatrix& p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RationalFunction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RationalFunction& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  RationalFunctionMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const RationalFunctionMatrix& a, const RationalFunctionMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend RationalFunctionMatrix operator*(const RationalFunctionMatrix& a, const RationalFunctionMatrix& b);
  friend RationalFunctionMatrix operator-(const RationalFunctionMatrix& a, const RationalFunctionMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalFunction> data_;
};

// Exact parse of a formula in s: rational literals, s, + - * /, integer powers
// and parentheses, e.g. "s^2/(0.1s^2 + 1.1s + 1)" (a number directly followed
// by s or '(' multiplies).
RationalFunction parse_rational_function(const std::string& text);
// Rows separated by ';', entries by ','.
RationalFunctionMatrix parse_rational_function_matrix(const std::string& text);

}  // namespace funobs
