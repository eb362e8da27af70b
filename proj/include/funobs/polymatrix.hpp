#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "funobs/matrix.hpp"
#include "funobs/polynomial.hpp"

namespace funobs {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit PolyMatrix(const Matrix& constant);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  int max_degree() const;
  Matrix eval(const Rational& s) const;
  PolyMatrix transpose() const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& src);

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

PolyMatrix vcat(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);

// Determinant of a square polynomial matrix by fraction-free elimination.
Polynomial determinant(const PolyMatrix& m);

// Rank over the field of rational functions Q(s).
std::size_t normal_rank(const PolyMatrix& p);

// U * P * V = S with U, V unimodular and S = diag(invariant_polys, 0...).
struct SmithDecomposition {
  PolyMatrix U;
  PolyMatrix S;
  PolyMatrix V;
  std::vector<Polynomial> invariant_polys;  // monic, each divides the next
};

SmithDecomposition smith_form(const PolyMatrix& p);
// Diagonal of the Smith form only; skips building the transformers.
std::vector<Polynomial> invariant_polynomials(const PolyMatrix& p);

// Monic product of the nontrivial invariant polynomials. Its roots, with
// multiplicity, are the invariant zeros of p. The constant 1 when there are none.
Polynomial zero_polynomial(const PolyMatrix& p);

std::string to_string(const PolyMatrix& m);

}  // namespace funobs
