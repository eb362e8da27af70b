#pragma once

#include <cstddef>

#include "funobs/matrix.hpp"

namespace funobs {

// Linear subspace of Q^d. The basis is kept in column-reduced echelon form
// with unit pivots, so two Subspace values are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;

  // Span of the columns of `generators` (which need not be independent).
  static Subspace span(const Matrix& generators);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  // Rows spanning the orthogonal complement: v is in the subspace iff annihilator() * v = 0.
  Matrix annihilator() const;
  bool contains(const Matrix& vectors) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
Subspace intersect(const Subspace& v, const Subspace& w);
Subspace sum(const Subspace& v, const Subspace& w);
// {x : a x in v}
Subspace preimage(const Matrix& a, const Subspace& v);
bool is_subspace_of(const Subspace& v, const Subspace& w);

}  // namespace funobs
